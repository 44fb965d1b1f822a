#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"

namespace spechthom {

// Q or F_p with p prime, p < 2^31.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime_field(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t p() const { return p_; }
  std::string name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_u32(std::uint32_t p);

// Dense matrix over a FieldSpec; entries are canonical (reduced rationals,
// or residues 0..p-1 held in the numerator).
class ExactMatrix {
public:
  ExactMatrix(FieldSpec field, int rows, int cols);
  static ExactMatrix from_integers(FieldSpec field, int rows, int cols,
                                   const std::vector<Int>& entries);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, const Rat& v);

  // Rank over the field: fraction-free (Bareiss) elimination over Q,
  // standard elimination over F_p.
  int rank() const;

private:
  FieldSpec field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Rank of an integer matrix over Q through Bareiss fraction-free elimination.
int rank_bareiss(int rows, int cols, std::vector<Int> a);
// Rank of an integer matrix over F_p.
int rank_mod_p(int rows, int cols, const std::vector<Int>& a, std::uint32_t p);
// Rank over Q through plain rational Gaussian elimination (cross-check path).
int rank_rational_gauss(int rows, int cols, const std::vector<Rat>& a);

// Sparse integer rows for the equivariance system.
struct SparseRow {
  std::vector<std::pair<int, Int>> entries; // (column, value)
};

// Rank of sparse integer rows over the field; exact. Over Q this runs a
// GCD-normalized integer echelon with a 64-bit fast path and a bigint
// fallback.
int rank_sparse_rows(const std::vector<SparseRow>& rows, int cols, const FieldSpec& field);

// Rank of dense integer rows over the field (Bareiss over Q, standard
// elimination over F_p).
int rank_int_rows(const std::vector<std::vector<Int>>& rows, const FieldSpec& field);

struct GammaBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension of { X : SignedAction(s_k)·X = X·SpechtAction(s_k) for all k },
// X an f^λ × |Γ| matrix over the field — the full Hom space dimension,
// computed from the action matrices alone. Throws GammaBoundExceeded when
// |Γ| > gamma_bound.
int hom_dim_oracle(const Partition& shape, const Bicomposition& type, const FieldSpec& field,
                   int gamma_bound = 400);

} // namespace spechthom
