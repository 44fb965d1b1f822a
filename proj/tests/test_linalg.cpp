#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spechthom/linalg.hpp"
#include "spechthom/rng.hpp"
#include "spechthom/tableau.hpp"

using namespace spechthom;

TEST_CASE("field spec primality check") {
  CHECK(FieldSpec::prime_field(2).p() == 2);
  CHECK(FieldSpec::prime_field(2147483647u).p() == 2147483647u);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime_field(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime_field(1000001), std::invalid_argument); // 101·9901
  CHECK(FieldSpec::rationals().is_rational());
}

TEST_CASE("identity rank over several fields") {
  for (int k : {1, 3, 7}) {
    std::vector<Int> id(static_cast<size_t>(k) * k, Int(0));
    for (int i = 0; i < k; ++i) id[static_cast<size_t>(i) * k + i] = 1;
    CHECK(rank_bareiss(k, k, id) == k);
    CHECK(rank_mod_p(k, k, id, 5) == k);
    CHECK(ExactMatrix::from_integers(FieldSpec::rationals(), k, k, id).rank() == k);
    CHECK(ExactMatrix::from_integers(FieldSpec::prime_field(3), k, k, id).rank() == k);
  }
}

TEST_CASE("rank drops modulo p") {
  // [[1, 1], [1, 1+p]] has rank 2 over Q and rank 1 over F_p
  const std::vector<Int> m{1, 1, 1, 4};
  CHECK(rank_bareiss(2, 2, m) == 2);
  CHECK(rank_mod_p(2, 2, m, 3) == 1);
  CHECK(rank_mod_p(2, 2, m, 5) == 2);
}

TEST_CASE("bareiss agrees with rational gauss on random matrices") {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    std::vector<Int> a(static_cast<size_t>(rows) * cols);
    std::vector<Rat> q(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      // skewed distribution with many zeros and repeated rows of small ints
      const int v = rng.below(7) - 3;
      a[i] = v;
      q[i] = v;
    }
    CHECK(rank_bareiss(rows, cols, a) == rank_rational_gauss(rows, cols, q));
  }
}

TEST_CASE("rank over F_p agrees with rank over Q away from bad primes") {
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    std::vector<Int> a(static_cast<size_t>(rows) * cols);
    for (auto& v : a) v = rng.below(9) - 4;
    const int rq = rank_bareiss(rows, cols, a);
    // a large prime avoids every pivot minor of a matrix this small
    CHECK(rank_mod_p(rows, cols, a, 2147483647u) == rq);
  }
}

TEST_CASE("sparse echelon agrees with dense ranks") {
  Rng rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + rng.below(10), cols = 1 + rng.below(10);
    std::vector<SparseRow> sparse(rows);
    std::vector<Int> dense(static_cast<size_t>(rows) * cols, Int(0));
    for (int r = 0; r < rows; ++r) {
      const int nnz = rng.below(cols + 1);
      for (int k = 0; k < nnz; ++k) {
        const int c = rng.below(cols);
        const int v = rng.below(11) - 5;
        sparse[r].entries.push_back({c, Int(v)});
        dense[static_cast<size_t>(r) * cols + c] += v;
      }
    }
    CHECK(rank_sparse_rows(sparse, cols, FieldSpec::rationals()) ==
          rank_bareiss(rows, cols, dense));
    CHECK(rank_sparse_rows(sparse, cols, FieldSpec::prime_field(3)) ==
          rank_mod_p(rows, cols, dense, 3));
  }
}

TEST_CASE("prime field entries canonicalize through set()") {
  ExactMatrix m(FieldSpec::prime_field(7), 1, 1);
  m.set(0, 0, Rat(3, 2)); // 3·2^{-1} = 3·4 = 12 = 5 (mod 7)
  CHECK(m.at(0, 0) == Rat(5));
}

TEST_CASE("hom dimension oracle: one-dimensional cases") {
  // single column vs all-signed type: the sign module maps onto itself
  CHECK(hom_dim_oracle(Partition({1, 1, 1, 1, 1, 1}),
                       Bicomposition(Composition(), Composition({6})),
                       FieldSpec::prime_field(5)) == 1);
  CHECK(hom_dim_oracle(Partition({1, 1, 1, 1, 1, 1}),
                       Bicomposition(Composition(), Composition({6})),
                       FieldSpec::rationals()) == 1);
  CHECK(hom_dim_oracle(Partition(), Bicomposition(), FieldSpec::rationals()) == 1);
  CHECK(hom_dim_oracle(Partition({1}), Bicomposition(Composition({1}), Composition()),
                       FieldSpec::rationals()) == 1);
}

TEST_CASE("hom dimension oracle equals semistandard counts over Q, n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& shape : enumerate_partitions(n))
      for (const auto& ab : enumerate_bicompositions(n))
        CHECK(hom_dim_oracle(shape, ab, FieldSpec::rationals()) ==
              static_cast<int>(enumerate_semistandard(shape, ab).size()));
}

TEST_CASE("gamma bound is enforced") {
  CHECK_THROWS_AS(hom_dim_oracle(Partition({1, 1, 1, 1, 1}),
                                 Bicomposition(Composition({1, 1, 1}), Composition({1, 1})),
                                 FieldSpec::rationals(), 100),
                  GammaBoundExceeded);
}
