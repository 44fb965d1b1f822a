#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace spechthom {

// All module coefficients are exact; intermediate straightening coefficients
// can exceed machine words, so everything arithmetic goes through cpp_int.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(int n, int k);

} // namespace spechthom
