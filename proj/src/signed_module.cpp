#include "spechthom/signed_module.hpp"

#include <stdexcept>

namespace spechthom {

SignedModule::ActionMatrix SignedModule::ActionMatrix::compose(const ActionMatrix& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("ActionMatrix: dimension mismatch");
  ActionMatrix out;
  out.dest.resize(dim());
  out.sign.resize(dim());
  for (int d = 0; d < dim(); ++d) {
    out.dest[d] = dest[rhs.dest[d]];
    out.sign[d] = sign[rhs.dest[d]] * rhs.sign[d];
  }
  return out;
}

SignedVector SignedModule::ActionMatrix::apply(const SignedVector& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw std::invalid_argument("ActionMatrix: vector size mismatch");
  SignedVector out(v.size(), Int(0));
  for (int d = 0; d < dim(); ++d) out[dest[d]] += Int(sign[d]) * v[d];
  return out;
}

SignedModule::SignedModule(const Bicomposition& ab) : type_(ab), gamma_(ab) {}

std::pair<int, int> SignedModule::act_basis(const Permutation& sigma, int rep_index) const {
  if (rep_index < 0 || rep_index >= gamma_.size())
    throw std::invalid_argument("act_basis: rep index out of range");
  const auto dec = gamma_.decompose(sigma * gamma_.rep(rep_index));
  return {dec.beta_sign, dec.rep_index};
}

SignedModule::ActionMatrix SignedModule::action_of(const Permutation& sigma) const {
  ActionMatrix m;
  m.dest.resize(gamma_.size());
  m.sign.resize(gamma_.size());
  for (int d = 0; d < gamma_.size(); ++d) {
    auto [sgn, dst] = act_basis(sigma, d);
    m.dest[d] = dst;
    m.sign[d] = sgn;
  }
  return m;
}

SignedModule::ActionMatrix SignedModule::generator_action(int k) const {
  const int n = type_.n();
  if (k < 1 || k >= n) throw std::invalid_argument("generator_action: k out of range");
  return action_of(Permutation::transposition(n, k, k + 1));
}

std::vector<SignedModule::ActionMatrix> SignedModule::generator_actions() const {
  std::vector<ActionMatrix> out;
  for (int k = 1; k < type_.n(); ++k) out.push_back(generator_action(k));
  return out;
}

} // namespace spechthom
