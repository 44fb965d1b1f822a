#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spechthom {

// Element of S_n stored as the image sequence: images()[i-1] = σ(i).
// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default; // degree 0
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  std::string to_string() const; // "[2,1,3]"
  std::string to_cycle_string() const; // "(1 2)" ; "()" for identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

// Parity of the permutation that stably sorts `word` ascending: +1 or -1.
int sort_parity(std::vector<int> word);

} // namespace spechthom
