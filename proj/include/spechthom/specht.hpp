#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"
#include "spechthom/symgroup.hpp"
#include "spechthom/tableau.hpp"

namespace spechthom {

// Row-equivalence class of a λ-tableau; canonical form keeps each row sorted.
class Tabloid {
public:
  explicit Tabloid(const NumericTableau& t);
  Tabloid(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::string to_string() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  friend auto operator<=>(const Tabloid&, const Tabloid&) = default; // lex on rows

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_; // each ascending
};

// Exact integer combination of tabloids; zero coefficients are dropped.
class TabloidVector {
public:
  void add(const Tabloid& t, const Int& coeff);
  const std::map<Tabloid, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  Int coeff(const Tabloid& t) const;

  TabloidVector& operator+=(const TabloidVector& rhs);
  TabloidVector& axpy(const Int& c, const TabloidVector& rhs); // this += c·rhs

  friend bool operator==(const TabloidVector&, const TabloidVector&) = default;

private:
  std::map<Tabloid, Int> terms_;
};

// e_t = Σ_{σ ∈ C_t} sgn(σ) {σ·t}
TabloidVector polytabloid_expansion(const NumericTableau& t);

// X ⊆ column j, Y ⊆ column j' (j < j'), |X| + |Y| > |C_j(λ)|.
struct GarnirSpec {
  std::vector<Cell> X;
  std::vector<Cell> Y;
  void validate(const Partition& shape) const;
};

// Pairs (sgn γ, γ·t) over the minimal-representative left transversal of
// S_{t(X)} S_{t(Y)} in S_{t(X∪Y)}; count = binom(|X|+|Y|, |X|), identity
// included.
std::vector<std::pair<int, NumericTableau>> garnir_sum(const NumericTableau& t,
                                                       const GarnirSpec& g);

// Coordinates over the standard-polytabloid basis.
using SpechtVector = std::vector<Int>;

// The integral Specht module S^λ_Z on its standard-polytabloid basis, with a
// straightening memo for non-standard tableaux.
class SpechtModule {
public:
  explicit SpechtModule(Partition shape);

  const Partition& shape() const { return shape_; }
  int dimension() const { return static_cast<int>(std_.size()); }
  const std::vector<NumericTableau>& standard_tableaux() const { return std_; }
  int index_of(const NumericTableau& standard) const;

  // Unique coordinates of e_t over standard polytabloids. Column descents are
  // removed first (e_{π·t} = sgn(π) e_t for π ∈ C_t), then the leftmost,
  // topmost row violation is expanded through a Garnir sum with
  // X = cells (i..end) of column j and Y = cells (1..i) of column j+1.
  // Every replacement tableau is strictly larger in the column-word
  // dominance order, so the recursion terminates on standard tableaux.
  SpechtVector straighten(const NumericTableau& t);

  // Matrix of v ↦ s_k·v on the standard basis, s_k = (k, k+1), 1 <= k < n;
  // column t holds straighten(s_k·t).
  std::vector<SpechtVector> generator_matrix(int k);
  std::vector<std::vector<SpechtVector>> generator_matrices();

private:
  SpechtVector straighten_sorted(const NumericTableau& t);

  Partition shape_;
  std::vector<NumericTableau> std_;
  std::map<std::vector<int>, int> index_; // row word → standard index
  std::unordered_map<std::string, SpechtVector> memo_;
};

} // namespace spechthom
