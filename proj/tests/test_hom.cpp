#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spechthom/hom.hpp"
#include "spechthom/rng.hpp"
#include "spechthom/specht.hpp"

using namespace spechthom;

namespace {

// The worked hook-shape instance: shape (2,1^{p+2}), type (∅|(p,2,2)),
// t_0 numbering the first column 1..p+3 and the extra node p+4.
struct HookInstance {
  Partition shape;
  Bicomposition type;
  NumericTableau t0;
  Permutation d1, d2, d3;

  explicit HookInstance(int p)
      : shape(make_shape(p)),
        type(Composition(), Composition({p, 2, 2})),
        t0(make_t0(p)),
        d1(Permutation::from_cycles(p + 4, {{p, p + 4, p + 2}})),
        d2(Permutation::from_cycles(p + 4, {{p + 2, p + 4}})),
        d3(Permutation::identity(p + 4)) {}

  static Partition make_shape(int p) {
    std::vector<int> parts{2};
    for (int i = 0; i < p + 2; ++i) parts.push_back(1);
    return Partition(parts);
  }
  static NumericTableau make_t0(int p) {
    std::vector<std::vector<int>> rows;
    rows.push_back({1, p + 4});
    for (int j = 2; j <= p + 3; ++j) rows.push_back({j});
    return NumericTableau(make_shape(p), rows);
  }
};

// d^{-1} R_{t0} d ∩ S_{α|β} ⊆ S_α, by enumeration.
bool in_R_group_theoretic(const HomContext& ctx, const Permutation& d) {
  const auto& spec = ctx.subgroup();
  bool ok = true;
  row_stabilizer(ctx.t0()).for_each([&](const Permutation& tau) {
    if (!ok) return;
    const auto c = d.inverse() * tau * d;
    if (spec.contains(c) && !spec.in_alpha_factor(c)) ok = false;
  });
  return ok;
}

bool in_C_group_theoretic(const HomContext& ctx, const Permutation& d) {
  const auto& spec = ctx.subgroup();
  bool ok = true;
  column_stabilizer(ctx.t0()).for_each([&](const Permutation& sigma) {
    if (!ok) return;
    const auto c = d.inverse() * sigma * d;
    if (spec.contains(c) && !spec.in_beta_factor(c)) ok = false;
  });
  return ok;
}

} // namespace

TEST_CASE("membership predicates on small fixtures") {
  {
    const HomContext ctx(Partition({2}), Bicomposition(Composition(), Composition({2})));
    CHECK_FALSE(ctx.in_R(Permutation::identity(2)));
    CHECK(ctx.in_C(Permutation::identity(2)));
  }
  {
    const HomContext ctx(Partition({1, 1, 1}),
                         Bicomposition(Composition({2}), Composition({1})));
    // single column: R_{t0} trivial, everything is in R
    std::vector<int> w{1, 2, 3};
    do {
      CHECK(ctx.in_R(Permutation(w)));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("membership predicates match the group-theoretic definition, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Permutation> sn;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      sn.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& d : sn) {
          CHECK(ctx.in_R(d) == in_R_group_theoretic(ctx, d));
          CHECK(ctx.in_C(d) == in_C_group_theoretic(ctx, d));
        }
      }
  }
}

TEST_CASE("semistandard representatives lie in R ∩ C, n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& d : ctx.gamma_sstd()) {
          CHECK(ctx.in_R(d));
          CHECK(ctx.in_C(d));
        }
      }
}

TEST_CASE("worked a-coefficient table at p = 3 and p = 2") {
  for (int p : {2, 3}) {
    const HookInstance inst(p);
    const HomContext ctx(inst.shape, inst.type, inst.t0);
    // T_0 is the third tableau of the worked example
    CHECK(is_semistandard(ctx.tableau_of(inst.d3)));
    CHECK(is_semistandard(ctx.tableau_of(inst.d2)));
    CHECK_FALSE(is_semistandard(ctx.tableau_of(inst.d1)));

    const Int lo = factorial(p - 1) * 4; // (p-1)!·4
    const Int hi = factorial(p) * 2;     // p!·2
    CHECK(ctx.a_coeff(inst.d1, inst.d2) == lo);
    CHECK(ctx.a_coeff(inst.d2, inst.d2) == hi);
    CHECK(ctx.a_coeff(inst.d3, inst.d2) == 0);
    CHECK(ctx.a_coeff(inst.d1, inst.d3) == -lo);
    CHECK(ctx.a_coeff(inst.d2, inst.d3) == 0);
    CHECK(ctx.a_coeff(inst.d3, inst.d3) == hi);

    CHECK(ctx.a_coeff_orbit(inst.d1, inst.d2) == lo);
    CHECK(ctx.a_coeff_orbit(inst.d2, inst.d2) == hi);
    CHECK(ctx.a_coeff_orbit(inst.d3, inst.d2) == 0);
    CHECK(ctx.a_coeff_orbit(inst.d1, inst.d3) == -lo);
    CHECK(ctx.a_coeff_orbit(inst.d2, inst.d3) == 0);
    CHECK(ctx.a_coeff_orbit(inst.d3, inst.d3) == hi);
  }
}

TEST_CASE("a_coeff requires the representative to be in R") {
  const HomContext ctx(Partition({2}), Bicomposition(Composition(), Composition({2})));
  CHECK_THROWS_AS(ctx.a_coeff(Permutation::identity(2), Permutation::identity(2)), RepNotInR);
  CHECK_THROWS_AS(ctx.a_coeff_orbit(Permutation::identity(2), Permutation::identity(2)),
                  RepNotInR);
}

TEST_CASE("a_coeff and a_coeff_orbit agree: exhaustive n <= 4, sampled n = 5") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (int i = 0; i < ctx.gamma().size(); ++i) {
          const auto& frak_d = ctx.gamma().rep(i);
          if (!ctx.in_R(frak_d)) continue;
          for (int j = 0; j < ctx.gamma().size(); ++j) {
            const auto& d = ctx.gamma().rep(j);
            CHECK(ctx.a_coeff(d, frak_d) == ctx.a_coeff_orbit(d, frak_d));
          }
        }
      }
  Rng rng(19);
  const auto partitions = enumerate_partitions(5);
  const auto bicomps = enumerate_bicompositions(5);
  for (int trial = 0; trial < 12; ++trial) {
    const auto& shape = partitions[rng.below(static_cast<int>(partitions.size()))];
    const auto& ab = bicomps[rng.below(static_cast<int>(bicomps.size()))];
    const HomContext ctx(shape, ab);
    for (int k = 0; k < 12; ++k) {
      const auto& frak_d = ctx.gamma().rep(rng.below(ctx.gamma().size()));
      if (!ctx.in_R(frak_d)) continue;
      const auto d = rng.random_permutation(5);
      CHECK(ctx.a_coeff(d, frak_d) == ctx.a_coeff_orbit(d, frak_d));
    }
  }
}

TEST_CASE("diagonal a-coefficients equal stabilizer orders, n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& frak_d : ctx.gamma_sstd())
          CHECK(ctx.a_coeff(frak_d, frak_d) == ctx.column_stab_order(frak_d));
      }
}

TEST_CASE("theta matrices on one-dimensional modules") {
  {
    // single column, type (∅|(n)): every σ ∈ C_{t0} contributes sgn(σ)², so
    // the 1×1 matrix is [n!]
    const HomContext ctx(Partition({1, 1, 1, 1, 1, 1}),
                         Bicomposition(Composition(), Composition({6})));
    const auto H = ctx.theta_matrix(Permutation::identity(6));
    REQUIRE(H.rows == 1);
    REQUIRE(H.cols == 1);
    Int direct = 0;
    for (const auto& sigma : ctx.column_stabilizer_elements())
      direct += Int(sigma.sign()) * Int(sigma.sign());
    CHECK(direct == factorial(6));
    CHECK(H.entries[0] == direct);
  }
  {
    // single row, type ((n)|∅): C_{t0} trivial, 1×1 matrix [1]
    const HomContext ctx(Partition({4}), Bicomposition(Composition({4}), Composition()));
    const auto H = ctx.theta_matrix(Permutation::identity(4));
    REQUIRE(H.rows == 1);
    REQUIRE(H.cols == 1);
    CHECK(H.entries[0] == 1);
  }
}

TEST_CASE("gamma_sstd on the worked instances") {
  {
    const HookInstance inst(3);
    const HomContext ctx(inst.shape, inst.type, inst.t0);
    const auto sstd_reps = ctx.gamma_sstd();
    REQUIRE(sstd_reps.size() == 2);
    std::set<ColorTableau> tabs;
    for (const auto& d : sstd_reps) tabs.insert(ctx.tableau_of(d));
    std::set<ColorTableau> expected{ctx.tableau_of(inst.d2), ctx.tableau_of(inst.d3)};
    CHECK(tabs == expected);
  }
  {
    const HomContext ctx(Partition({2, 1}), Bicomposition(Composition(), Composition({3})));
    CHECK(ctx.gamma_sstd().empty());
  }
}

TEST_CASE("theta scalar relation on the double coset") {
  Rng rng(37);
  const HookInstance inst(2);
  const HomContext ctx(inst.shape, inst.type, inst.t0);
  const auto& frak_d = inst.d2;
  const auto H = ctx.theta_matrix(frak_d);
  const auto taus = row_stabilizer(ctx.t0()).elements();
  const auto xis = ctx.subgroup().elements();
  for (int trial = 0; trial < 5; ++trial) {
    const auto& tau = taus[rng.below(static_cast<int>(taus.size()))];
    const auto& xi = xis[rng.below(static_cast<int>(xis.size()))];
    const auto frak_d2 = tau * frak_d * xi;
    const int eps = ctx.epsilon(frak_d2, frak_d);
    const auto H2 = ctx.theta_matrix(frak_d2);
    REQUIRE(H2.entries.size() == H.entries.size());
    for (size_t i = 0; i < H.entries.size(); ++i)
      CHECK(H2.entries[i] == Int(eps) * H.entries[i]);
  }
}

TEST_CASE("theta entries match the brute-force a-coefficients, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& frak_d : ctx.gamma_sstd()) {
          const auto H = ctx.theta_matrix(frak_d);
          const auto D = ctx.theta_matrix_direct(frak_d, ctx.gamma().reps());
          CHECK(H.entries == D.entries);
        }
      }
}

TEST_CASE("preorder basics and the coset characterization, n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        const int G = ctx.gamma().size();
        // orbit sets of the column stabilizer on Γ
        std::vector<std::set<int>> orbit(G);
        for (int i = 0; i < G; ++i)
          for (const auto& sigma : ctx.column_stabilizer_elements())
            orbit[i].insert(ctx.gamma().coset_index(sigma * ctx.gamma().rep(i)));
        for (int i = 0; i < G; ++i) {
          CHECK(ctx.preorder(ctx.gamma().rep(i), ctx.gamma().rep(i)).equivalent());
          for (int j = 0; j < G; ++j) {
            const auto rel = ctx.preorder(ctx.gamma().rep(i), ctx.gamma().rep(j));
            CHECK(rel.equivalent() == (orbit[i].count(j) > 0));
          }
        }
      }
}

TEST_CASE("nonzero a-coefficients dominate semistandard representatives, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& frak_d : ctx.gamma_sstd())
          for (int j = 0; j < ctx.gamma().size(); ++j) {
            const auto& d = ctx.gamma().rep(j);
            if (ctx.a_coeff(d, frak_d) != 0) CHECK(ctx.preorder(d, frak_d).geq);
          }
      }
}

TEST_CASE("vanishing off C and the omega coset structure, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const HomContext ctx(shape, ab);
        for (const auto& frak_d : ctx.gamma_sstd())
          for (int j = 0; j < ctx.gamma().size(); ++j) {
            const auto& d = ctx.gamma().rep(j);
            if (!ctx.in_C(d)) CHECK(ctx.a_coeff(d, frak_d) == 0);
            const auto omega = ctx.omega_set(d, frak_d);
            CHECK(Int(omega.size()) % ctx.column_stab_order(d) == 0);
          }
      }
}

TEST_CASE("li_condition") {
  // ℓ(λ) < p forces the condition
  CHECK(li_condition(Partition({3, 2}), Bicomposition(Composition({3}), Composition({2})), 3));
  // a single column of n equal d-colours fails for p <= n
  CHECK_FALSE(li_condition(Partition({1, 1, 1, 1}),
                           Bicomposition(Composition(), Composition({4})), 3));
  // the hook instance at p = 3 fails
  const HookInstance inst(3);
  CHECK_FALSE(li_condition(inst.shape, inst.type, 3));
  CHECK_THROWS_AS(li_condition(Partition({2}), Bicomposition(Composition({2}), Composition()), 4),
                  std::invalid_argument);
}

TEST_CASE("sign equivariance of a-coefficients, randomized") {
  Rng rng(41);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    const int n = 3 + rng.below(3); // 3..5
    const auto partitions = enumerate_partitions(n);
    const auto bicomps = enumerate_bicompositions(n);
    const auto& shape = partitions[rng.below(static_cast<int>(partitions.size()))];
    const auto& ab = bicomps[rng.below(static_cast<int>(bicomps.size()))];
    const HomContext ctx(shape, ab);
    const auto frak_d = rng.random_permutation(n);
    if (!ctx.in_R(frak_d)) continue;
    const auto d = rng.random_permutation(n);
    const auto taus = row_stabilizer(ctx.t0()).elements();
    const auto sigmas = ctx.column_stabilizer_elements();
    const auto xis = ctx.subgroup().elements();
    const auto& tau = taus[rng.below(static_cast<int>(taus.size()))];
    const auto& sigma = sigmas[rng.below(static_cast<int>(sigmas.size()))];
    const auto& xi = xis[rng.below(static_cast<int>(xis.size()))];
    const auto& eta = xis[rng.below(static_cast<int>(xis.size()))];
    const auto frak_d2 = tau * frak_d * xi;
    const auto d2 = sigma * d * eta;
    CHECK(ctx.in_R(frak_d2));
    const Int lhs = ctx.a_coeff(d2, frak_d2);
    const Int rhs = Int(sigma.sign()) * Int(ctx.subgroup().beta_sign(xi)) *
                    Int(ctx.subgroup().beta_sign(eta)) * ctx.a_coeff(d, frak_d);
    CHECK(lhs == rhs);
    ++done;
  }
  CHECK(done >= 60);
}
