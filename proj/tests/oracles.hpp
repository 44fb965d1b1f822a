#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"

namespace spechthom::oracles {

// Number of standard tableaux by the hook length formula.
inline Int hook_length_count(const Partition& shape) {
  const Partition conj = shape.conjugate();
  Int hooks = 1;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) {
      const int arm = shape.part(i) - j;
      const int leg = conj.part(j) - i;
      hooks *= arm + leg + 1;
    }
  return factorial(shape.n()) / hooks;
}

// Number of partitions of n by the classical two-variable recurrence
// p(n, k) = p(n-k, k) + p(n, k-1).
inline long long partition_count(int n) {
  std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
  return p[n][n];
}

// n! / Π parts! for the concatenated composition.
inline Int multinomial(int n, const std::vector<int>& parts) {
  Int r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

} // namespace spechthom::oracles
