#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "spechthom/permutation.hpp"

namespace spechthom {

// splitmix64; self-contained so seeded runs are stable across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool coin() { return next() & 1; }

  Permutation random_permutation(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[below(i + 1)]);
    return Permutation(std::move(img));
  }

private:
  std::uint64_t s_;
};

} // namespace spechthom
