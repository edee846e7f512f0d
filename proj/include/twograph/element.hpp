#pragma once

#include <map>
#include <memory>
#include <utility>

#include "twograph/scalar.hpp"
#include "twograph/theta.hpp"
#include "twograph/word.hpp"

namespace twograph {

using ThetaPtr = std::shared_ptr<const ThetaSpec>;

// The standard generator s_u s_v*; both words are kept in normal form.
struct GenPair {
  Word u;
  Word v;

  DegreeDiff degree_diff() const { return diff(u.degree(), v.degree()); }
  bool diagonal() const { return u == v; }
  GenPair adjoint() const { return {v, u}; }

  friend bool operator==(const GenPair& a, const GenPair& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const GenPair& a, const GenPair& b) {
    if (!(a.u == b.u)) return a.u < b.u;
    return a.v < b.v;
  }
};

// Finite linear combination of standard generators with no stored zero
// coefficients.  The term map is ordered, so iteration is deterministic.
// All mutating entry points keep the coefficient mode (exact vs float)
// uniform across terms: any float contribution demotes the whole element.
class Element {
 public:
  using TermMap = std::map<GenPair, Scalar>;

  Element() = default;
  explicit Element(ThetaPtr theta) : theta_(std::move(theta)) {}

  static Element zero(ThetaPtr theta) { return Element(std::move(theta)); }
  static Element unit(ThetaPtr theta);
  static Element generator(ThetaPtr theta, Word u, Word v,
                           Scalar coeff = Scalar(1));

  const ThetaPtr& theta() const { return theta_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return exact_; }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulate coeff * s_u s_v*, pruning exact zeros.
  void add_term(const GenPair& g, const Scalar& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }

  Element scaled(const Scalar& c) const;

  // Largest left-word degree component; the minimal level at which the
  // element embeds into the leveled picture.
  int min_level() const;

  bool gauge_invariant() const;

 private:
  friend void demote_to_float(Element& x);
  ThetaPtr theta_;
  TermMap terms_;
  bool exact_ = true;
};

// Theta compatibility guard shared by all binary operations.
const ThetaPtr& common_theta(const Element& a, const Element& b);

// Product rule core: resolves s_v* s_w into the sum of s_alpha s_beta*
// over all pairs with v.alpha == w.beta of the join degree.  The callback
// receives (alpha, beta); scratch words, do not retain.
template <typename Fn>
void for_each_resolution(const Word& v, const Word& w, const ThetaSpec& theta,
                         Fn&& fn) {
  Degree p = join(v.degree(), w.degree());
  Degree da = subtract(p, v.degree());
  Degree db = subtract(p, w.degree());
  // Enumerate the smaller side and solve for the other by factorization.
  if (word_count(da, theta) <= word_count(db, theta)) {
    for_each_word(da, theta, [&](const Word& alpha) {
      Word z = concat(v, alpha, theta);
      auto [head, beta] = factor(z, w.degree(), theta);
      if (head == w) fn(alpha, beta);
    });
  } else {
    for_each_word(db, theta, [&](const Word& beta) {
      Word z = concat(w, beta, theta);
      auto [head, alpha] = factor(z, v.degree(), theta);
      if (head == v) fn(alpha, beta);
    });
  }
}

// (s_u s_v*)(s_w s_x*) = sum over resolutions of s_{u.alpha} s_{x.beta}*,
// extended bilinearly.
Element mul(const Element& a, const Element& b);

// The *-involution: (u,v) -> (v,u) with conjugated coefficients.
Element adjoint(const Element& a);

// Rewrite every term so its left word has degree (K,K), inserting
// defect-free resolutions of the identity; the element is unchanged.
Element level(const Element& a, int K);

// Equality decided on leveled coefficient maps at the minimal common level.
bool equals(const Element& a, const Element& b, double tol = 1e-9);

// Gauge action: scales each term by t1^x t2^y, (x,y) the degree-diff.
// Result is in float mode.
Element gauge(const Element& a, std::complex<double> t1,
              std::complex<double> t2, double tol = 1e-9);

// Expectation onto the gauge-invariant core: keeps terms with equal
// left and right degrees.
Element gauge_expectation(const Element& a);

// The distinguished state: sum over diagonal terms (u,u) of
// coeff * m^{-k} n^{-l} where degree(u) = (k,l).
Scalar omega(const Element& a);

// The trace on the gauge-invariant core; requires gauge invariance.
Scalar trace(const Element& a);

// omega(a * b) computed without materializing the product.
Scalar omega_product(const Element& a, const Element& b);

// Modular flow at real time t: term (u,v) picks up
// exp(i t (x ln m + y ln n)) with (x,y) = degree(v) - degree(u).
Element modular_flow(const Element& a, double t);

// Modular flow at imaginary time i*beta: term factor m^{-beta x} n^{-beta y}
// with (x,y) = degree(v) - degree(u).  Exact whenever every exponent is an
// integer (always the case for integer beta), float otherwise.
Element modular_flow_imag(const Element& a, const Rational& beta);

// Expectation onto the fixed-point algebra of the modular flow for a
// dependence m^a = n^b: keeps terms whose degree-diff (x,y) satisfies
// b*x + a*y == 0.  Requires a, b >= 1.
Element flow_expectation(const Element& a, int pa, int pb);

// omega(x* x); nonnegative, zero iff x == 0.
Scalar omega_norm_sq(const Element& x);

}  // namespace twograph
