#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "twograph/errors.hpp"
#include "twograph/expr.hpp"

using namespace twograph;
using namespace twograph::testing;

TEST_CASE("parse: documented example") {
  auto theta = make_id(2, 3);
  Element x = parse_element("1/2 * S(e1 f2 ; f1) + S(; e2)", theta);
  REQUIRE(x.term_count() == 2);
  Rational h(1, 2);
  h.canonicalize();
  GenPair g1{Word{{1}, {2}}, Word::red(1)};
  GenPair g2{Word{}, Word::blue(2)};
  CHECK(x.terms().at(g1) == Scalar(h));
  CHECK(x.terms().at(g2) == Scalar(1));
}

TEST_CASE("parse: signs, i factors, coalescing") {
  auto theta = make_id(2, 2);
  Element x = parse_element("-S(e1;) + 3/2 i * S(e1;) + S(e1;)", theta);
  REQUIRE(x.term_count() == 1);
  Rational ti(3, 2);
  ti.canonicalize();
  CHECK(x.terms().begin()->second == Scalar(Rational(0), ti));

  Element cancelled = parse_element("S(e1;f1) - S(e1;f1)", theta);
  CHECK(cancelled.is_zero());

  Element word_run = parse_element("S(e1f2e2 ; )", theta);
  REQUIRE(word_run.term_count() == 1);
}

TEST_CASE("parse: words are normalized") {
  auto theta = make_flip(2);
  // f1 e2 = e1 f2 under flip.
  Element x = parse_element("S(f1 e2 ;)", theta);
  REQUIRE(x.term_count() == 1);
  CHECK(x.terms().begin()->first == GenPair{Word{{1}, {2}}, Word{}});
}

TEST_CASE("parse errors carry positions") {
  auto theta = make_id(2, 2);
  CHECK_THROWS_AS(parse_element("S(e1; e1", theta), ParseError);
  CHECK_THROWS_AS(parse_element("1/0 * S(;)", theta), ParseError);
  CHECK_THROWS_AS(parse_element("S(e5;)", theta), ParseError);
  CHECK_THROWS_AS(parse_element("S(e1;) S(e2;)", theta), ParseError);
  try {
    parse_element("S(e1;) +\n+ S(e2;)", theta);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("decimal coefficients switch to float mode") {
  auto theta = make_id(2, 2);
  Element x = parse_element("0.5 * S(e1;e1)", theta);
  CHECK_FALSE(x.is_exact());
  CHECK(equals(x, parse_element("1/2 * S(e1;e1)", theta)));
}

TEST_CASE("round-trip: printed form re-parses to an equal element") {
  std::mt19937 rng(71);
  for (auto theta : {make_id(2, 3), make_flip(2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Element x = random_element(theta, 4, 2, rng);
      Element back = parse_element(to_expr(x), theta);
      CHECK(equals(x, back));
      CHECK(back.terms() == x.terms());
    }
  }
  CHECK(parse_element("0", make_id(2, 2)).is_zero());
}

TEST_CASE("round-trip in float mode") {
  std::mt19937 rng(73);
  auto theta = make_id(2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Element x = modular_flow(random_element(theta, 3, 2, rng), 0.37);
    Element back = parse_element(to_expr(x), theta);
    CHECK_FALSE(back.is_exact());
    CHECK(equals(x, back, 1e-12));
  }
}
