#include "spechthom/bigint.hpp"

#include <stdexcept>

namespace spechthom {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

} // namespace spechthom
