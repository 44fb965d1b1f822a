#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spechthom/io.hpp"

using namespace spechthom;

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,2,1") == Partition({2, 2, 1}));
  CHECK(parse_partition("") == Partition());
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,"), ParseError);
  try {
    parse_partition("2,x");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("bicomposition parsing") {
  const auto ab = parse_bicomposition("2|2,1");
  CHECK(ab.alpha() == Composition({2}));
  CHECK(ab.beta() == Composition({2, 1}));
  const auto b = parse_bicomposition("|3,2,2");
  CHECK(b.alpha() == Composition());
  CHECK(b.beta() == Composition({3, 2, 2}));
  const auto c = parse_bicomposition("4|");
  CHECK(c.beta() == Composition());
  CHECK(parse_bicomposition("|").n() == 0);
  CHECK_THROWS_AS(parse_bicomposition("1,2"), ParseError);
  CHECK_THROWS_AS(parse_bicomposition("1|2|3"), ParseError);
}

TEST_CASE("permutation parsing") {
  CHECK(parse_permutation("[2,1,3]", 3) == Permutation({2, 1, 3}));
  CHECK(parse_permutation("(1 2)", 3) == Permutation::transposition(3, 1, 2));
  CHECK(parse_permutation("(1,2)(3,4)", 4) ==
        Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(parse_permutation("id", 5).is_identity());
  CHECK(parse_permutation("()", 2).is_identity());
  CHECK(parse_permutation("(5 7)", 7) == Permutation::from_cycles(7, {{5, 7}}));
  CHECK_THROWS_AS(parse_permutation("[2,1]", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 9)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("nonsense", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("[2,2,1]", 3), ParseError);
}

TEST_CASE("tableau parsing") {
  const Partition shape({2, 1, 1, 1, 1, 1});
  const auto t = parse_numeric_tableau("1,7/2/3/4/5/6", shape);
  CHECK(t.at(1, 2) == 7);
  CHECK(t.at(6, 1) == 6);
  CHECK_THROWS_AS(parse_numeric_tableau("1,2/3", shape), ParseError);
  CHECK_THROWS_AS(parse_numeric_tableau("1,1/2", Partition({2, 1})), ParseError);

  const auto ct = parse_color_tableau("c1,c1/d1,d2/d1", Partition({2, 2, 1}),
                                      parse_bicomposition("2|2,1"));
  CHECK(ct.at(2, 2) == Color{1, 2});
  CHECK_THROWS_AS(parse_color_tableau("c1,c1/d1,d2/d2", Partition({2, 2, 1}),
                                      parse_bicomposition("2|2,1")),
                  ParseError);
}

TEST_CASE("json serialization shapes") {
  const auto shape = Partition({2, 1});
  const auto ab = parse_bicomposition("2|1");
  const HomContext ctx(shape, ab);
  const auto H = ctx.theta_matrix(ctx.gamma_sstd().at(0));
  const auto j = hom_matrix_json(H);
  CHECK(j["shape"] == json({2, 1}));
  CHECK(j["type"]["alpha"] == json({2}));
  CHECK(j["rows"] == H.rows);
  CHECK(j["cols"] == H.cols);
  CHECK(j["entries"].size() == static_cast<size_t>(H.rows));
  // entries serialize as decimal strings
  CHECK(j["entries"][0][0].is_string());

  const auto sv = specht_vector_json(shape, {Int(1), Int(-2)});
  CHECK(sv["basis"] == "std-lex");
  CHECK(sv["coords"][1] == "-2");
  const auto gv = signed_vector_json(ab, {Int(3)});
  CHECK(gv["basis"] == "gamma-distinguished");

  // byte-identical dumps across repeated serialization
  CHECK(hom_matrix_json(H).dump() == j.dump());
}

TEST_CASE("permutation json round trip") {
  const auto p = Permutation({3, 1, 2});
  CHECK(to_json(p) == json({3, 1, 2}));
  CHECK(p.to_string() == "[3,1,2]");
  CHECK(p.to_cycle_string() == "(1 3 2)");
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
}
