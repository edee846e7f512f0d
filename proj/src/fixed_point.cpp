#include "twograph/fixed_point.hpp"

#include "twograph/errors.hpp"

namespace twograph {

namespace {

void check_solution(const ThetaPtr& theta, int a, int b) {
  if (!theta) throw PreconditionError("flip unitary requires a theta spec");
  if (a < 1 || b < 1)
    throw PreconditionError("flip unitary requires a, b >= 1");
  if (word_count({a, 0}, *theta) != word_count({0, b}, *theta))
    throw PreconditionError("m^a != n^b: no bijection between the word sets");
}

}  // namespace

FlipUnitary FlipUnitary::lexicographic(const ThetaPtr& theta, int a, int b) {
  check_solution(theta, a, b);
  WordBijection jmath;
  std::vector<Word> blues = enumerate_words({a, 0}, *theta);
  std::vector<Word> reds = enumerate_words({0, b}, *theta);
  for (std::size_t t = 0; t < blues.size(); ++t)
    jmath.emplace(blues[t], reds[t]);
  return with_bijection(theta, a, b, std::move(jmath));
}

FlipUnitary FlipUnitary::with_bijection(const ThetaPtr& theta, int a, int b,
                                        WordBijection jmath) {
  check_solution(theta, a, b);
  if (jmath.size() != word_count({a, 0}, *theta))
    throw PreconditionError("bijection does not cover all blue words");
  std::map<Word, int> seen;
  for (const auto& [u, v] : jmath) {
    if (u.degree() != Degree{a, 0} || v.degree() != Degree{0, b})
      throw PreconditionError("bijection entry has wrong word degrees");
    if (++seen[v] > 1)
      throw PreconditionError("bijection image repeats a red word");
  }
  Element element(theta);
  for (const auto& [u, v] : jmath) element.add_term(GenPair{u, v}, Scalar(1));
  return FlipUnitary(a, b, std::move(jmath), std::move(element));
}

Element FlipUnitary::power(int k) const {
  if (k == 0) return Element::unit(theta());
  Element base = k > 0 ? element_ : adjoint(element_);
  Element out = base;
  for (int t = 1; t < std::abs(k); ++t) out = mul(out, base);
  return out;
}

Element conjugate(const FlipUnitary& u, const Element& x) {
  if (!x.gauge_invariant())
    throw PreconditionError(
        "conjugation by the flip unitary is defined on the gauge-invariant "
        "core");
  common_theta(u.element(), x);
  return mul(mul(u.element(), x), adjoint(u.element()));
}

bool in_flow_fixed_algebra(const Element& x, int a, int b) {
  if (a < 1 || b < 1)
    throw PreconditionError("fixed-point membership requires a, b >= 1");
  for (const auto& [g, c] : x.terms()) {
    DegreeDiff d = g.degree_diff();
    if (d.x % a != 0) return false;
    long k = d.x / a;
    if (d.y != -k * b) return false;
  }
  return true;
}

Decomposition decompose(const Element& x, const FlipUnitary& u) {
  common_theta(x, u.element());
  if (!in_flow_fixed_algebra(x, u.a(), u.b()))
    throw PreconditionError(
        "element is not fixed by the modular flow at degree (a,-b)");
  std::map<int, Element> graded;
  for (const auto& [g, c] : x.terms()) {
    int k = g.degree_diff().x / u.a();
    auto [it, fresh] = graded.try_emplace(k, Element(x.theta()));
    it->second.add_term(g, c);
  }
  Decomposition out;
  for (auto& [k, part] : graded)
    out.parts.emplace(k, mul(part, u.power(-k)));
  return out;
}

Element reassemble(const Decomposition& d, const FlipUnitary& u) {
  Element out(u.theta());
  for (const auto& [k, part] : d.parts) out += mul(part, u.power(k));
  return out;
}

Element core_expectation(const Element& x, const FlipUnitary& u) {
  common_theta(x, u.element());
  if (!in_flow_fixed_algebra(x, u.a(), u.b()))
    throw PreconditionError(
        "element is not fixed by the modular flow at degree (a,-b)");
  // The zero mode of the grading is exactly the gauge-invariant part.
  return gauge_expectation(x);
}

}  // namespace twograph
