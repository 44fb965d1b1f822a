#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spechthom/rng.hpp"
#include "spechthom/signed_module.hpp"

using namespace spechthom;

TEST_CASE("unsigned type gives a permutation action") {
  // (μ|∅): ordinary Young permutation module, all signs +1
  const SignedModule mod(Bicomposition(Composition({2, 2}), Composition()));
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sigma = rng.random_permutation(4);
    const auto act = mod.action_of(sigma);
    for (int d = 0; d < mod.dimension(); ++d) CHECK(act.sign[d] == 1);
  }
}

TEST_CASE("type (∅|(n)) is the sign representation") {
  const SignedModule mod(Bicomposition(Composition(), Composition({5})));
  REQUIRE(mod.dimension() == 1);
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sigma = rng.random_permutation(5);
    const auto [sgn, dst] = mod.act_basis(sigma, 0);
    CHECK(dst == 0);
    CHECK(sgn == sigma.sign());
  }
}

TEST_CASE("block transposition acts by -1") {
  const SignedModule mod(Bicomposition(Composition({1}), Composition({2})));
  const auto [sgn, dst] = mod.act_basis(Permutation::transposition(3, 2, 3), 0);
  CHECK(sgn == -1);
  CHECK(mod.transversal().rep(dst).is_identity());
}

TEST_CASE("generator actions are involutions with one entry per column") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& ab : enumerate_bicompositions(n)) {
      const SignedModule mod(ab);
      for (int k = 1; k < n; ++k) {
        const auto act = mod.generator_action(k);
        const auto sq = act.compose(act);
        for (int d = 0; d < mod.dimension(); ++d) {
          CHECK(sq.dest[d] == d);
          CHECK(sq.sign[d] == 1);
          CHECK((act.sign[d] == 1 || act.sign[d] == -1));
        }
      }
    }
}

TEST_CASE("action is a homomorphism: 100 random pairs, n <= 7") {
  Rng rng(7);
  for (int n = 2; n <= 7; ++n) {
    const auto bicomps = enumerate_bicompositions(n);
    const int trials = n <= 5 ? 20 : 10;
    for (int trial = 0; trial < trials; ++trial) {
      const auto& ab = bicomps[rng.below(static_cast<int>(bicomps.size()))];
      const SignedModule mod(ab);
      const auto sigma = rng.random_permutation(n);
      const auto tau = rng.random_permutation(n);
      const auto lhs = mod.action_of(sigma).compose(mod.action_of(tau));
      const auto rhs = mod.action_of(sigma * tau);
      CHECK(lhs.dest == rhs.dest);
      CHECK(lhs.sign == rhs.sign);
    }
  }
}

TEST_CASE("reduced word of the longest element composes correctly") {
  const int n = 5;
  const Bicomposition ab(Composition({2}), Composition({2, 1}));
  const SignedModule mod(ab);
  // w0 = [n, n-1, ..., 1] via the standard reduced word s1 (s2 s1) (s3 s2 s1)...
  SignedModule::ActionMatrix prod;
  prod.dest.resize(mod.dimension());
  prod.sign.assign(mod.dimension(), 1);
  for (int d = 0; d < mod.dimension(); ++d) prod.dest[d] = d;
  for (int k = 2; k <= n; ++k)
    for (int j = k - 1; j >= 1; --j) prod = prod.compose(mod.generator_action(j));
  std::vector<int> w0(n);
  for (int i = 0; i < n; ++i) w0[i] = n - i;
  const auto direct = mod.action_of(Permutation(w0));
  CHECK(prod.dest == direct.dest);
  CHECK(prod.sign == direct.sign);
}

TEST_CASE("twist identity at the level of dimensions, n <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& ab : enumerate_bicompositions(n))
      CHECK(SignedModule(ab).dimension() == SignedModule(ab.swapped()).dimension());
}
