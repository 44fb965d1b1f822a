#pragma once

#include <vector>

#include "spechthom/bigint.hpp"
#include "spechthom/partition.hpp"
#include "spechthom/permutation.hpp"
#include "spechthom/symgroup.hpp"

namespace spechthom {

// Coordinates over the basis {d ⊗ 1 ⊗ ε : d ∈ Γ} of M_Z(α|β).
using SignedVector = std::vector<Int>;

// M_Z(α|β) on the distinguished transversal basis. The action of σ sends a
// basis element to ±(another basis element): σ·(d⊗1⊗ε) = sgn(ξ_β)(d'⊗1⊗ε)
// where σd = d'·ξ_α·ξ_β^{+|α|}.
class SignedModule {
public:
  // One ±1 entry per column: column d maps to row dest[d] with sign[d].
  struct ActionMatrix {
    std::vector<int> dest;
    std::vector<int> sign;
    int dim() const { return static_cast<int>(dest.size()); }
    ActionMatrix compose(const ActionMatrix& rhs) const; // this ∘ rhs
    // Apply to a coordinate vector: (out)[dest[d]] += sign[d]·v[d].
    SignedVector apply(const SignedVector& v) const;
  };

  explicit SignedModule(const Bicomposition& ab);

  const Bicomposition& type() const { return type_; }
  int dimension() const { return gamma_.size(); }
  const Transversal& transversal() const { return gamma_; }

  // σ·(d ⊗ 1 ⊗ ε) for d = reps()[rep_index]; returns (sign, index of d').
  std::pair<int, int> act_basis(const Permutation& sigma, int rep_index) const;

  ActionMatrix action_of(const Permutation& sigma) const;
  ActionMatrix generator_action(int k) const; // s_k = (k, k+1)
  std::vector<ActionMatrix> generator_actions() const;

private:
  Bicomposition type_;
  Transversal gamma_;
};

} // namespace spechthom
