#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"
#include "spechthom/permutation.hpp"
#include "spechthom/signed_module.hpp"
#include "spechthom/symgroup.hpp"
#include "spechthom/tableau.hpp"

namespace spechthom {

// Matrix of θ̂_𝔡: row s holds θ̂_𝔡(e_s) over the Γ basis, s running through
// the standard tableaux in their fixed order; entry(s, d) = a_{ρ_s^{-1}d, 𝔡}.
struct HomMatrix {
  Partition shape;
  Bicomposition type;
  Permutation rep; // 𝔡
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries; // row-major

  const Int& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
  Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const HomMatrix&, const HomMatrix&) = default;
};

struct PreorderRelation {
  bool geq = false; // d ⊵ d'
  bool leq = false; // d' ⊵ d
  bool equivalent() const { return geq && leq; }
  bool strictly_greater() const { return geq && !leq; }
};

// Everything attached to a fixed (λ, (α|β), t_0): the canonical colouring,
// the column stabilizer C_{t0}, the distinguished transversal Γ, the ℛ/𝒞
// predicates, the coefficients a_{d,𝔡} and the maps θ̂_𝔡.
class HomContext {
public:
  HomContext(Partition shape, Bicomposition type); // t_0 = t^λ
  HomContext(Partition shape, Bicomposition type, NumericTableau t0);

  const Partition& shape() const { return shape_; }
  const Bicomposition& type() const { return type_; }
  const NumericTableau& t0() const { return t0_; }
  int n() const { return shape_.n(); }
  const Transversal& gamma() const { return gamma_; }
  const YoungSubgroupSpec& subgroup() const { return gamma_.spec(); }
  const std::vector<NumericTableau>& standard_tableaux() const { return std_; }

  ColorTableau tableau_of(const Permutation& d) const; // T_d through t_0

  // d ∈ ℛ: no row of T_d repeats a d-colour (equivalently
  // d^{-1} R_{t0} d ∩ S_{α|β} ⊆ S_α).
  bool in_R(const Permutation& d) const;
  // d ∈ 𝒞: no column of T_d repeats a c-colour.
  bool in_C(const Permutation& d) const;

  bool in_row_double_coset(const Permutation& omega, const Permutation& frak_d) const;
  int epsilon(const Permutation& omega, const Permutation& frak_d) const;

  // C_{t0} in a fixed order (paired with signs internally).
  const std::vector<Permutation>& column_stabilizer_elements() const;
  // Ω_{d,𝔡} as indices into column_stabilizer_elements().
  std::vector<int> omega_set(const Permutation& d, const Permutation& frak_d) const;

  // a_{d,𝔡} = Σ_{σ ∈ Ω_{d,𝔡}} sgn(σ) ε_𝔡(σd), brute force over C_{t0}.
  Int a_coeff(const Permutation& d, const Permutation& frak_d) const;
  // Same value through the orbit description: zero when d ∉ 𝒞 or the coset
  // intersection is empty, else |C_{t0} ∩ d S_{α|β} d^{-1}| · Σ_i ε^(i).
  Int a_coeff_orbit(const Permutation& d, const Permutation& frak_d) const;

  // |stab_{C_{t0}}(T_d)| = |C_{t0} ∩ d S_{α|β} d^{-1}|
  Int column_stab_order(const Permutation& d) const;

  std::vector<int> gamma_sstd_indices() const;
  std::vector<Permutation> gamma_sstd() const;

  // ϑ_𝔡(t) over Γ (or over an alternative transversal).
  SignedVector vartheta(const NumericTableau& t, const Permutation& frak_d) const;
  SignedVector vartheta_over(const NumericTableau& t, const Permutation& frak_d,
                             const std::vector<Permutation>& transversal) const;

  HomMatrix theta_matrix(const Permutation& frak_d) const;
  HomMatrix theta_matrix_over(const Permutation& frak_d,
                              const std::vector<Permutation>& transversal) const;
  // Every entry through the plain brute-force a_coeff, no coset
  // normalization; regression path for the transversal-independence check.
  HomMatrix theta_matrix_direct(const Permutation& frak_d,
                                const std::vector<Permutation>& transversal) const;

  // Sorted colour contents of the columns of T_d.
  std::vector<std::vector<int>> column_signature(const Permutation& d) const;
  PreorderRelation preorder(const Permutation& d, const Permutation& d_prime) const;

private:
  struct StabElem {
    std::vector<int> img;
    std::vector<int> inv;
    int sign;
  };

  void build();
  // Calls f(index into C_{t0}, sgn(σ)·ε_𝔡(σd)) for every σ ∈ Ω_{d,𝔡};
  // with_eps = false skips the ε work and passes 0.
  template <typename F>
  void omega_scan(const Permutation& d, const Permutation& frak_d, bool with_eps, F&& f) const;
  int color_code(Color c) const { return c.kind == 0 ? c.index - 1 : alpha_len_ + c.index - 1; }
  // a_{d,𝔡} with d reduced to its Γ representative; memoized per 𝔡.
  Int a_coeff_rep_memo(int rep_index, const Permutation& frak_d,
                       std::vector<std::optional<Int>>& memo) const;

  Partition shape_;
  Bicomposition type_;
  NumericTableau t0_;
  Transversal gamma_;
  std::vector<NumericTableau> std_;

  int alpha_len_ = 0;
  int ncolors_ = 0;
  std::vector<int> code_of_value_;            // canonical colour code of each value
  std::vector<char> code_is_d_;
  std::vector<std::vector<int>> row_labels_;  // t_0 labels per row, column order
  std::vector<std::vector<int>> col_labels_;  // t_0 labels per column, row order
  std::vector<StabElem> cstab_;
  mutable std::vector<Permutation> cstab_perms_; // lazily exposed for tests
  mutable std::map<std::vector<int>, std::vector<std::optional<Int>>> theta_cache_;
};

// Thm on the p-column condition: true iff no column of any semistandard
// λ-tableau of type (α|β) has p or more nodes of the same colour.
bool li_condition(const Partition& shape, const Bicomposition& type, int p);

} // namespace spechthom
