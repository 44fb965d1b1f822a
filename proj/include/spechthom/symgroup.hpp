#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"
#include "spechthom/permutation.hpp"
#include "spechthom/tableau.hpp"

namespace spechthom {

// Young subgroup S_{α|β} of S_n: consecutive blocks of sizes α_1, ..., β_ℓ,
// with the β-blocks carrying the sign twist.
class YoungSubgroupSpec {
public:
  struct Block {
    int start; // first value, 1-based
    int len;
    bool is_beta;
  };

  explicit YoungSubgroupSpec(const Bicomposition& ab);

  int n() const { return n_; }
  const Bicomposition& type() const { return type_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int value) const { return block_of_[value - 1]; } // 0-based index

  Int order() const;

  bool contains(const Permutation& x) const; // x preserves every block
  // contains(x) and x is the identity on the β-blocks (i.e. x ∈ S_α)
  bool in_alpha_factor(const Permutation& x) const;
  // contains(x) and x is the identity on the α-blocks (i.e. x ∈ S_β^{+|α|})
  bool in_beta_factor(const Permutation& x) const;

  // Splits ξ ∈ S_{α|β} as (ξ_α, ξ_β) with ξ_α ∈ S_{|α|} and ξ_β ∈ S_{|β|}
  // de-translated; ξ = ξ_α · ξ_β^{+|α|}.
  std::pair<Permutation, Permutation> split(const Permutation& xi) const;
  // sgn(ξ_β) without building the split.
  int beta_sign(const Permutation& xi) const;

  void for_each_element(const std::function<void(const Permutation&)>& f) const;
  std::vector<Permutation> elements() const;

private:
  Bicomposition type_;
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

// Direct product of symmetric groups on disjoint label sets; used for the
// row and column stabilizers R_t and C_t.
class LabelSetGroup {
public:
  explicit LabelSetGroup(int n, std::vector<std::vector<int>> orbits);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  Int order() const;
  void for_each(const std::function<void(const Permutation&)>& f) const;
  std::vector<Permutation> elements() const;
  bool contains(const Permutation& x) const;

private:
  int n_ = 0;
  std::vector<std::vector<int>> orbits_;
};

LabelSetGroup row_stabilizer(const NumericTableau& t);
LabelSetGroup column_stabilizer(const NumericTableau& t);

// Left transversal of S_{α|β} in S_n made of the minimal coset
// representatives: each rep is increasing on every block. Order is
// lexicographic in the block word (w(v) = block containing d^{-1}(v)).
class Transversal {
public:
  struct Decomposition {
    int rep_index;
    Permutation xi_alpha; // in S_{|α|}
    Permutation xi_beta;  // in S_{|β|}, de-translated
    int beta_sign;
  };

  explicit Transversal(const Bicomposition& ab);

  const YoungSubgroupSpec& spec() const { return spec_; }
  const std::vector<Permutation>& reps() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }
  const Permutation& rep(int i) const { return reps_[i]; }

  // Index of the coset x·S_{α|β} within reps().
  int coset_index(const Permutation& x) const;
  // x = rep · ξ_α · ξ_β^{+|α|}
  Decomposition decompose(const Permutation& x) const;

private:
  std::vector<int> block_word(const Permutation& x) const;

  YoungSubgroupSpec spec_;
  std::vector<Permutation> reps_;
  std::vector<std::vector<int>> words_; // sorted lexicographically
};

// T_d = d · T_0, the colour tableau attached to the coset d·S_{α|β}
// through t0.
ColorTableau coset_tableau(const Permutation& d, const NumericTableau& t0,
                           const Bicomposition& ab);

// ω ∈ R_{t0} · 𝔡 · S_{α|β}, tested via row colour contents: membership holds
// iff every row of T_ω and T_𝔡 has the same colour multiset.
bool in_row_double_coset(const Permutation& omega, const Permutation& frak_d,
                         const NumericTableau& t0, const Bicomposition& ab);

struct RepNotInR : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInDoubleCoset : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ε_𝔡(ω) = sgn(ξ_β) for any factorization ω = τ 𝔡 ξ_α ξ_β^{+|α|} with
// τ ∈ R_{t0}; requires 𝔡 ∈ ℛ (throws RepNotInR) and membership in the
// double coset (throws NotInDoubleCoset).
int epsilon(const Permutation& omega, const Permutation& frak_d,
            const NumericTableau& t0, const Bicomposition& ab);

} // namespace spechthom
