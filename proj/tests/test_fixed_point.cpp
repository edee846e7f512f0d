#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "twograph/errors.hpp"
#include "twograph/fixed_point.hpp"

using namespace twograph;
using namespace twograph::testing;

namespace {

Element gen(const ThetaPtr& theta, Word u, Word v) {
  return Element::generator(theta, std::move(u), std::move(v));
}

}  // namespace

TEST_CASE("lexicographic flip unitary at a = b = 1") {
  auto theta = make_id(2, 2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  REQUIRE(u.element().term_count() == 2);
  CHECK(u.element().terms().count(GenPair{Word::blue(1), Word::red(1)}) == 1);
  CHECK(u.element().terms().count(GenPair{Word::blue(2), Word::red(2)}) == 1);
}

TEST_CASE("flip unitary is unitary, symbolically") {
  for (auto theta : {make_id(2, 2), make_flip(3), make_id(3, 3)}) {
    FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
    Element unit = Element::unit(theta);
    CHECK(equals(mul(u.element(), adjoint(u.element())), unit));
    CHECK(equals(mul(adjoint(u.element()), u.element()), unit));
  }
}

TEST_CASE("flip unitary construction errors") {
  auto theta = make_id(2, 3);
  CHECK_THROWS_AS(FlipUnitary::lexicographic(theta, 1, 1),
                  PreconditionError);

  auto square = make_id(2, 2);
  WordBijection bad;
  bad.emplace(Word::blue(1), Word::red(1));
  bad.emplace(Word::blue(2), Word::red(1));
  CHECK_THROWS_AS(FlipUnitary::with_bijection(square, 1, 1, std::move(bad)),
                  PreconditionError);

  WordBijection wrong_degree;
  wrong_degree.emplace(Word::blue(1), Word::red(1));
  wrong_degree.emplace(Word{{1, 2}, {}}, Word::red(2));
  CHECK_THROWS_AS(
      FlipUnitary::with_bijection(square, 1, 1, std::move(wrong_degree)),
      PreconditionError);
}

TEST_CASE("any two flip unitaries differ by a core unitary") {
  auto theta = make_id(2, 2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  WordBijection swapped;
  swapped.emplace(Word::blue(1), Word::red(2));
  swapped.emplace(Word::blue(2), Word::red(1));
  FlipUnitary v = FlipUnitary::with_bijection(theta, 1, 1, std::move(swapped));
  Element transition = mul(adjoint(u.element()), v.element());
  CHECK(transition.gauge_invariant());
  CHECK(equals(gauge_expectation(transition), transition));
  // And the transition is itself unitary.
  CHECK(equals(mul(transition, adjoint(transition)), Element::unit(theta)));
}

TEST_CASE("power: integer powers multiply out to the unit") {
  auto theta = make_flip(2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  for (int k = 1; k <= 3; ++k) {
    CHECK(equals(mul(u.power(k), u.power(-k)), Element::unit(theta)));
    CHECK(equals(mul(u.power(-k), u.power(k)), Element::unit(theta)));
  }
  CHECK(equals(u.power(0), Element::unit(theta)));
}

TEST_CASE("conjugation fixes the unit and preserves the core") {
  std::mt19937 rng(139);
  for (int mn = 2; mn <= 3; ++mn) {
    auto theta = make_id(mn, mn);
    FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
    CHECK(equals(conjugate(u, Element::unit(theta)), Element::unit(theta)));
    for (int trial = 0; trial < 6; ++trial) {
      Element x = random_core_element(theta, 1, 3, rng);
      Element rx = conjugate(u, x);
      CHECK(rx.gauge_invariant());
      CHECK(equals(gauge_expectation(rx), rx));
      CHECK(trace(rx) == trace(x));
    }
    CHECK_THROWS_AS(conjugate(u, gen(theta, Word::blue(1), Word{})),
                    PreconditionError);
  }
}

TEST_CASE("conjugation is unital, multiplicative and star-preserving") {
  std::mt19937 rng(149);
  for (int mn = 2; mn <= 3; ++mn) {
    auto theta = make_flip(mn);
    FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
    for (int trial = 0; trial < 6; ++trial) {
      Element x = random_core_element(theta, 1, 2, rng);
      Element y = random_core_element(theta, 1, 2, rng);
      CHECK(equals(conjugate(u, mul(x, y)),
                   mul(conjugate(u, x), conjugate(u, y))));
      CHECK(equals(conjugate(u, adjoint(x)), adjoint(conjugate(u, x))));
    }
  }
}

TEST_CASE("fixed-point membership by degree-diff lines") {
  auto theta = make_id(2, 2);
  CHECK(in_flow_fixed_algebra(Element::unit(theta), 1, 1));
  CHECK_FALSE(in_flow_fixed_algebra(gen(theta, Word::blue(1), Word{}), 1, 1));
  CHECK(in_flow_fixed_algebra(gen(theta, Word::blue(1), Word::red(1)), 1, 1));
  // (2,-1) is off the line Z*(1,-1).
  CHECK_FALSE(in_flow_fixed_algebra(
      gen(theta, Word{{1, 2}, {}}, Word::red(1)), 1, 1));
  CHECK_THROWS_AS(in_flow_fixed_algebra(Element::unit(theta), 0, 1),
                  PreconditionError);
}

TEST_CASE("decompose: documented gradings") {
  auto theta = make_id(2, 2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);

  Decomposition du = decompose(u.element(), u);
  REQUIRE(du.parts.size() == 1);
  REQUIRE(du.parts.count(1) == 1);
  CHECK(equals(du.parts.at(1), Element::unit(theta)));

  std::mt19937 rng(151);
  Element core = random_core_element(theta, 1, 3, rng);
  Decomposition dc = decompose(core, u);
  if (!core.is_zero()) {
    REQUIRE(dc.parts.size() == 1);
    CHECK(equals(dc.parts.at(0), core));
  }

  // The lexicographic bijection at m = n = 2 pairs e1 with f1.
  Decomposition dg = decompose(gen(theta, Word::blue(1), Word::red(1)), u);
  REQUIRE(dg.parts.size() == 1);
  CHECK(equals(dg.parts.at(1), gen(theta, Word::blue(1), Word::blue(1))));

  CHECK_THROWS_AS(decompose(gen(theta, Word::blue(1), Word{}), u),
                  PreconditionError);
}

TEST_CASE("decompose and reassemble are inverse on random fixed elements") {
  std::mt19937 rng(157);
  auto theta = make_id(2, 2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  for (int trial = 0; trial < 15; ++trial) {
    Element x(theta);
    for (int k = -1; k <= 2; ++k)
      x += mul(random_core_element(theta, 1, 2, rng), u.power(k));
    REQUIRE(in_flow_fixed_algebra(x, 1, 1));
    Decomposition d = decompose(x, u);
    for (const auto& [k, part] : d.parts) {
      CHECK(part.gauge_invariant());
      CHECK(equals(gauge_expectation(part), part));
    }
    CHECK(equals(reassemble(d, u), x));
  }
}

TEST_CASE("core expectation is the zero mode") {
  std::mt19937 rng(163);
  auto theta = make_id(2, 2);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  CHECK(core_expectation(u.element(), u).is_zero());

  Element core = random_core_element(theta, 1, 3, rng);
  CHECK(equals(core_expectation(core, u), core));

  for (int trial = 0; trial < 10; ++trial) {
    Element x(theta);
    for (int k = 0; k <= 2; ++k)
      x += mul(random_core_element(theta, 1, 2, rng), u.power(k));
    Element psi = core_expectation(x, u);
    CHECK(omega(psi) == omega(x));
    Decomposition d = decompose(x, u);
    if (d.parts.count(0))
      CHECK(equals(psi, d.parts.at(0)));
    else
      CHECK(psi.is_zero());
  }
  CHECK_THROWS_AS(core_expectation(gen(theta, Word::blue(1), Word{}), u),
                  PreconditionError);
}

TEST_CASE("flip unitary for the (4,8) dependence") {
  auto theta = make_id(4, 8);
  FlipUnitary u = FlipUnitary::lexicographic(theta, 3, 2);
  CHECK(u.element().term_count() == 64);
  CHECK(equals(mul(u.element(), adjoint(u.element())),
               Element::unit(theta)));
}
