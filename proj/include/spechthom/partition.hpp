#pragma once

#include <string>
#include <vector>

namespace spechthom {

struct Cell {
  int row = 0; // 1-based
  int col = 0; // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite sequence of positive integers; the empty composition is allowed.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const { return sum_; }
  int part(int i) const { return parts_[i - 1]; } // 1-based

  // s_0 = 0, s_j = parts[0] + ... + parts[j-1], up to s_length.
  std::vector<int> prefix_sums() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

// Weakly decreasing positive parts summing to n; λ = ∅ has n = 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  int part(int i) const { // 1-based; 0 past the end
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }
  int column_length(int j) const; // (λ')_j
  Partition conjugate() const;
  std::vector<Cell> cells() const; // row-reading order

  Composition as_composition() const { return Composition(parts_); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Pair of compositions with |α| + |β| = n.
class Bicomposition {
public:
  Bicomposition() = default;
  Bicomposition(Composition alpha, Composition beta);

  const Composition& alpha() const { return alpha_; }
  const Composition& beta() const { return beta_; }
  int n() const { return alpha_.sum() + beta_.sum(); }
  int alpha_size() const { return alpha_.sum(); }
  int beta_size() const { return beta_.sum(); }

  // (α|β) viewed as the concatenated composition of n.
  Composition concatenated() const;

  // (β|α)
  Bicomposition swapped() const { return Bicomposition(beta_, alpha_); }

  std::string to_string() const; // "2|2,1", "|3,2,2"

  friend bool operator==(const Bicomposition&, const Bicomposition&) = default;
  friend auto operator<=>(const Bicomposition&, const Bicomposition&) = default;

private:
  Composition alpha_, beta_;
};

// All partitions of n, in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// All compositions of n (2^(n-1) of them for n >= 1; [∅] for n = 0).
std::vector<Composition> enumerate_compositions(int n);

// All bicompositions of n.
std::vector<Bicomposition> enumerate_bicompositions(int n);

} // namespace spechthom
