#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spechthom/rng.hpp"
#include "spechthom/symgroup.hpp"

using namespace spechthom;

TEST_CASE("permutation basics") {
  CHECK(Permutation::identity(4).sign() == 1);
  CHECK(Permutation::transposition(3, 1, 2).sign() == -1);
  CHECK(Permutation::from_cycles(3, {{1, 2, 3}}).sign() == 1);
  const auto a = Permutation({2, 3, 1});
  CHECK((a * a.inverse()).is_identity());
  // (a*b)(x) = a(b(x))
  const auto b = Permutation::transposition(3, 1, 2);
  CHECK((a * b)(1) == a(b(1)));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("row and column stabilizer orders") {
  const auto t = NumericTableau::initial(Partition({2, 1}));
  CHECK(row_stabilizer(t).order() == 2);
  CHECK(column_stabilizer(t).order() == 2);
  const auto col = NumericTableau::initial(Partition({1, 1, 1, 1}));
  CHECK(row_stabilizer(col).order() == 1);
  CHECK(column_stabilizer(col).order() == 24);
  CHECK(row_stabilizer(col).elements().size() == 1);
  CHECK(column_stabilizer(col).elements().size() == 24);
}

TEST_CASE("stabilizers conjugate under the action") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Partition shape({3, 2});
    const auto t = NumericTableau::initial(shape);
    const auto sigma = rng.random_permutation(5);
    const auto moved = t.acted_by(sigma);
    std::set<Permutation> lhs, rhs;
    for (const auto& r : row_stabilizer(moved).elements()) lhs.insert(r);
    for (const auto& r : row_stabilizer(t).elements())
      rhs.insert(sigma * r * sigma.inverse());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("distinguished transversal sizes and minimality") {
  {
    const Transversal tr(Bicomposition(Composition(), Composition({3})));
    REQUIRE(tr.size() == 1);
    CHECK(tr.rep(0).is_identity());
  }
  {
    const Transversal tr(Bicomposition(Composition({1}), Composition({2})));
    CHECK(tr.size() == 3);
  }
  {
    const Transversal tr(Bicomposition(Composition({3}), Composition({3})));
    CHECK(tr.size() == 20); // 720 / 36
  }
  // reps increase on every block; index · |S_{α|β}| = n!
  for (int n = 0; n <= 5; ++n)
    for (const auto& ab : enumerate_bicompositions(n)) {
      const Transversal tr(ab);
      CHECK(Int(tr.size()) * tr.spec().order() == factorial(n));
      for (const auto& rep : tr.reps())
        for (const auto& block : tr.spec().blocks())
          for (int v = block.start; v + 1 < block.start + block.len; ++v)
            CHECK(rep(v) < rep(v + 1));
    }
}

TEST_CASE("coset decomposition round trip") {
  Rng rng(11);
  for (int n = 1; n <= 7; ++n) {
    const auto bicomps = enumerate_bicompositions(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& ab = bicomps[rng.below(static_cast<int>(bicomps.size()))];
      const Transversal tr(ab);
      const auto x = rng.random_permutation(n);
      const auto dec = tr.decompose(x);
      // embed (ξ_α, ξ_β) back into S_n
      std::vector<int> img(n);
      const int a = ab.alpha_size();
      for (int p = 1; p <= a; ++p) img[p - 1] = dec.xi_alpha(p);
      for (int p = 1; p <= n - a; ++p) img[a + p - 1] = dec.xi_beta(p) + a;
      const auto xi = Permutation(img);
      CHECK(tr.rep(dec.rep_index) * xi == x);
      CHECK(dec.beta_sign == dec.xi_beta.sign());
    }
  }
}

TEST_CASE("decompose identity and a block transposition") {
  const Bicomposition ab(Composition({1}), Composition({2}));
  const Transversal tr(ab);
  const auto id3 = Permutation::identity(3);
  const auto dec = tr.decompose(id3);
  CHECK(tr.rep(dec.rep_index).is_identity());
  CHECK(dec.xi_alpha.is_identity());
  CHECK(dec.xi_beta.is_identity());

  const auto dec2 = tr.decompose(Permutation::transposition(3, 2, 3));
  CHECK(tr.rep(dec2.rep_index).is_identity());
  CHECK(dec2.xi_beta == Permutation::transposition(2, 1, 2));
  CHECK(dec2.beta_sign == -1);
}

TEST_CASE("coset tableau: canonical tableau at the identity") {
  const Partition shape({2, 1});
  const Bicomposition ab(Composition({2}), Composition({1}));
  const auto t0 = NumericTableau::initial(shape);
  const auto T0 = coset_tableau(Permutation::identity(3), t0, ab);
  CHECK(T0.at(1, 1) == Color{0, 1});
  CHECK(T0.at(1, 2) == Color{0, 1});
  CHECK(T0.at(2, 1) == Color{1, 1});
}

TEST_CASE("coset tableau constant on cosets") {
  Rng rng(3);
  const Partition shape({2, 2});
  const Bicomposition ab(Composition({2}), Composition({2}));
  const auto t0 = NumericTableau::initial(shape);
  const auto spec = YoungSubgroupSpec(ab);
  const auto elems = spec.elements();
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = rng.random_permutation(4);
    const auto& xi = elems[rng.below(static_cast<int>(elems.size()))];
    CHECK(coset_tableau(d, t0, ab) == coset_tableau(d * xi, t0, ab));
  }
}

TEST_CASE("row double coset membership vs brute force, n <= 4") {
  Rng rng(17);
  for (int n = 2; n <= 4; ++n) {
    // all permutations of S_n
    std::vector<Permutation> sn;
    {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::vector<int> w = img;
      do {
        sn.push_back(Permutation(w));
      } while (std::next_permutation(w.begin(), w.end()));
    }
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n)) {
        const auto t0 = NumericTableau::initial(shape);
        const Transversal tr(ab);
        const auto& frak_d = tr.rep(rng.below(tr.size()));
        // enumerate R_{t0}·𝔡·S_{α|β}
        std::set<Permutation> dc;
        for (const auto& tau : row_stabilizer(t0).elements())
          for (const auto& xi : tr.spec().elements()) dc.insert(tau * frak_d * xi);
        for (const auto& w : sn)
          CHECK(in_row_double_coset(w, frak_d, t0, ab) == (dc.count(w) > 0));
      }
  }
}

TEST_CASE("epsilon basics") {
  // single column, type (∅|(2)): R trivial, ε(ω) = sgn(ω)
  const Partition shape({1, 1});
  const Bicomposition ab(Composition(), Composition({2}));
  const auto t0 = NumericTableau::initial(shape);
  const auto id = Permutation::identity(2);
  CHECK(epsilon(id, id, t0, ab) == 1);
  CHECK(epsilon(Permutation::transposition(2, 1, 2), id, t0, ab) == -1);
}

TEST_CASE("epsilon errors distinguish the two preconditions") {
  // type (∅|(2)) on a single row: T_d repeats d1 in the row, so d ∉ R
  const Partition row({2});
  const Bicomposition ab(Composition(), Composition({2}));
  const auto t0 = NumericTableau::initial(row);
  CHECK_THROWS_AS(epsilon(Permutation::identity(2), Permutation::identity(2), t0, ab),
                  RepNotInR);

  // two singleton rows, type ((1)|(1)): ω = (1 2) swaps the colours, so the
  // row contents differ from those of T_id
  const Partition shape({1, 1});
  const Bicomposition ab2(Composition({1}), Composition({1}));
  const auto t02 = NumericTableau::initial(shape);
  CHECK_THROWS_AS(
      epsilon(Permutation::transposition(2, 1, 2), Permutation::identity(2), t02, ab2),
      NotInDoubleCoset);
}

TEST_CASE("epsilon independent of the factorization, n <= 5") {
  Rng rng(23);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto partitions = enumerate_partitions(n);
      const auto bicomps = enumerate_bicompositions(n);
      const auto& shape = partitions[rng.below(static_cast<int>(partitions.size()))];
      const auto& ab = bicomps[rng.below(static_cast<int>(bicomps.size()))];
      const auto t0 = NumericTableau::initial(shape);
      const Transversal tr(ab);
      // pick 𝔡 ∈ R by rejection over Γ
      Permutation frak_d = Permutation::identity(n);
      bool found = false;
      for (int k = 0; k < tr.size(); ++k) {
        const auto& cand = tr.rep(rng.below(tr.size()));
        if (coset_tableau(cand, t0, ab).row_repeats_only_c()) {
          frak_d = cand;
          found = true;
          break;
        }
      }
      if (!found) continue;
      // a random member of the double coset
      const auto taus = row_stabilizer(t0).elements();
      const auto xis = tr.spec().elements();
      const auto& tau0 = taus[rng.below(static_cast<int>(taus.size()))];
      const auto& xi0 = xis[rng.below(static_cast<int>(xis.size()))];
      const auto omega = tau0 * frak_d * xi0;
      const int expected = epsilon(omega, frak_d, t0, ab);
      // all valid factorizations give the same β-sign
      int checked = 0;
      for (const auto& tau : taus) {
        const auto rest = frak_d.inverse() * tau.inverse() * omega;
        if (!tr.spec().contains(rest)) continue;
        ++checked;
        CHECK(tr.spec().beta_sign(rest) == expected);
        if (checked >= 50) break;
      }
      CHECK(checked >= 1);
    }
  }
}
