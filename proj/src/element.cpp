#include "twograph/element.hpp"

#include <cmath>
#include <complex>

#include "twograph/errors.hpp"

namespace twograph {

namespace {

void require_theta(const ThetaPtr& t) {
  if (!t) throw PreconditionError("element has no theta attached");
}

}  // namespace

void demote_to_float(Element& x) {
  if (!x.exact_) return;
  x.exact_ = false;
  for (auto& [g, c] : x.terms_) c = Scalar::approx(c.to_complex());
}

Element Element::unit(ThetaPtr theta) {
  Element e(std::move(theta));
  e.add_term(GenPair{}, Scalar(1));
  return e;
}

Element Element::generator(ThetaPtr theta, Word u, Word v, Scalar coeff) {
  Element e(std::move(theta));
  e.add_term(GenPair{std::move(u), std::move(v)}, coeff);
  return e;
}

void Element::add_term(const GenPair& g, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (!coeff.is_exact() && exact_) demote_to_float(*this);
  if (!exact_ && coeff.is_exact()) {
    add_term(g, Scalar::approx(coeff.to_complex()));
    return;
  }
  auto [it, fresh] = terms_.try_emplace(g, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!theta_) theta_ = o.theta_;
  else if (o.theta_) common_theta(*this, o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!theta_) theta_ = o.theta_;
  else if (o.theta_) common_theta(*this, o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

Element Element::scaled(const Scalar& c) const {
  Element out(theta_);
  for (const auto& [g, coeff] : terms_) out.add_term(g, coeff * c);
  return out;
}

int Element::min_level() const {
  int k = 0;
  for (const auto& [g, c] : terms_) {
    Degree d = g.u.degree();
    k = std::max({k, d.blue, d.red});
  }
  return k;
}

bool Element::gauge_invariant() const {
  for (const auto& [g, c] : terms_)
    if (!g.degree_diff().is_zero()) return false;
  return true;
}

const ThetaPtr& common_theta(const Element& a, const Element& b) {
  require_theta(a.theta());
  require_theta(b.theta());
  if (a.theta() != b.theta() && !(*a.theta() == *b.theta()))
    throw PreconditionError("elements live over different theta specs");
  return a.theta();
}

Element mul(const Element& a, const Element& b) {
  const ThetaPtr& tp = common_theta(a, b);
  const ThetaSpec& theta = *tp;
  Element out(tp);
  if (!a.is_exact() || !b.is_exact()) demote_to_float(out);
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      Scalar c = ca * cb;
      for_each_resolution(ga.v, gb.u, theta,
                          [&](const Word& alpha, const Word& beta) {
                            out.add_term(GenPair{concat(ga.u, alpha, theta),
                                                 concat(gb.v, beta, theta)},
                                         c);
                          });
    }
  }
  return out;
}

Element adjoint(const Element& a) {
  Element out(a.theta());
  for (const auto& [g, c] : a.terms()) out.add_term(g.adjoint(), c.conj());
  return out;
}

Element level(const Element& a, int K) {
  require_theta(a.theta());
  const ThetaSpec& theta = *a.theta();
  Degree target{K, K};
  Element out(a.theta());
  if (!a.is_exact()) demote_to_float(out);
  for (const auto& [g, c] : a.terms()) {
    if (!dominated_by(g.u.degree(), target))
      throw PreconditionError(
          "level " + std::to_string(K) +
          " is too small for a term of left degree (" +
          std::to_string(g.u.degree().blue) + "," +
          std::to_string(g.u.degree().red) + ")");
    Degree rest = subtract(target, g.u.degree());
    for_each_word(rest, theta, [&](const Word& alpha) {
      out.add_term(
          GenPair{concat(g.u, alpha, theta), concat(g.v, alpha, theta)}, c);
    });
  }
  return out;
}

bool equals(const Element& a, const Element& b, double tol) {
  common_theta(a, b);
  int K = std::max(a.min_level(), b.min_level());
  Element la = level(a, K);
  Element lb = level(b, K);
  if (la.is_exact() && lb.is_exact()) return la.terms() == lb.terms();
  // Float comparison over the union of supports.
  auto ia = la.terms().begin(), ea = la.terms().end();
  auto ib = lb.terms().begin(), eb = lb.terms().end();
  Scalar zero;
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      if (!ia->second.equal(zero, tol)) return false;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      if (!ib->second.equal(zero, tol)) return false;
      ++ib;
    } else {
      if (!ia->second.equal(ib->second, tol)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

Element gauge(const Element& a, std::complex<double> t1,
              std::complex<double> t2, double tol) {
  if (std::abs(std::abs(t1) - 1.0) > tol || std::abs(std::abs(t2) - 1.0) > tol)
    throw PreconditionError("gauge parameters must have unit modulus");
  auto ipow = [](std::complex<double> z, int e) {
    std::complex<double> r = 1.0;
    std::complex<double> base = e < 0 ? 1.0 / z : z;
    for (int k = std::abs(e); k > 0; --k) r *= base;
    return r;
  };
  Element out(a.theta());
  demote_to_float(out);
  for (const auto& [g, c] : a.terms()) {
    DegreeDiff d = g.degree_diff();
    out.add_term(g, Scalar::approx(c.to_complex() * ipow(t1, d.x) *
                                   ipow(t2, d.y)));
  }
  return out;
}

Element gauge_expectation(const Element& a) {
  Element out(a.theta());
  for (const auto& [g, c] : a.terms())
    if (g.degree_diff().is_zero()) out.add_term(g, c);
  return out;
}

Scalar omega(const Element& a) {
  require_theta(a.theta());
  long m = a.theta()->m();
  long n = a.theta()->n();
  if (a.is_exact()) {
    Scalar acc;
    for (const auto& [g, c] : a.terms()) {
      if (!g.diagonal()) continue;
      Degree d = g.u.degree();
      acc += c * Scalar(rational_power(m, -d.blue) *
                        rational_power(n, -d.red));
    }
    return acc;
  }
  std::complex<double> acc = 0.0;
  for (const auto& [g, c] : a.terms()) {
    if (!g.diagonal()) continue;
    Degree d = g.u.degree();
    acc += c.to_complex() * std::pow(static_cast<double>(m), -d.blue) *
           std::pow(static_cast<double>(n), -d.red);
  }
  return Scalar::approx(acc);
}

Scalar trace(const Element& a) {
  if (!a.gauge_invariant())
    throw PreconditionError(
        "trace is only defined on the gauge-invariant core");
  return omega(a);
}

Scalar omega_product(const Element& a, const Element& b) {
  const ThetaPtr& tp = common_theta(a, b);
  const ThetaSpec& theta = *tp;
  long m = theta.m();
  long n = theta.n();
  if (a.is_exact() && b.is_exact()) {
    Scalar acc;
    for (const auto& [ga, ca] : a.terms()) {
      for (const auto& [gb, cb] : b.terms()) {
        // Only diagonal product terms contribute to the state.
        if (!(ga.degree_diff() + gb.degree_diff()).is_zero()) continue;
        for_each_resolution(ga.v, gb.u, theta,
                            [&](const Word& alpha, const Word& beta) {
                              Word left = concat(ga.u, alpha, theta);
                              Word right = concat(gb.v, beta, theta);
                              if (!(left == right)) return;
                              Degree d = left.degree();
                              acc += ca * cb *
                                     Scalar(rational_power(m, -d.blue) *
                                            rational_power(n, -d.red));
                            });
      }
    }
    return acc;
  }
  return omega(mul(a, b));
}

Element modular_flow(const Element& a, double t) {
  require_theta(a.theta());
  double lm = std::log(static_cast<double>(a.theta()->m()));
  double ln = std::log(static_cast<double>(a.theta()->n()));
  Element out(a.theta());
  demote_to_float(out);
  for (const auto& [g, c] : a.terms()) {
    DegreeDiff d = -g.degree_diff();  // degree(v) - degree(u)
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, t * (d.x * lm + d.y * ln)));
    out.add_term(g, Scalar::approx(c.to_complex() * phase));
  }
  return out;
}

Element modular_flow_imag(const Element& a, const Rational& beta) {
  require_theta(a.theta());
  long m = a.theta()->m();
  long n = a.theta()->n();
  bool integral = true;
  for (const auto& [g, c] : a.terms()) {
    DegreeDiff d = -g.degree_diff();
    Rational ex = -beta * d.x;
    Rational ey = -beta * d.y;
    if (ex.get_den() != 1 || ey.get_den() != 1) {
      integral = false;
      break;
    }
  }
  Element out(a.theta());
  if (integral && a.is_exact()) {
    for (const auto& [g, c] : a.terms()) {
      DegreeDiff d = -g.degree_diff();
      Rational ex = -beta * d.x;
      Rational ey = -beta * d.y;
      out.add_term(g, c * Scalar(rational_power(m, ex.get_num().get_si()) *
                                 rational_power(n, ey.get_num().get_si())));
    }
    return out;
  }
  demote_to_float(out);
  double bd = beta.get_d();
  for (const auto& [g, c] : a.terms()) {
    DegreeDiff d = -g.degree_diff();
    double factor = std::pow(static_cast<double>(m), -bd * d.x) *
                    std::pow(static_cast<double>(n), -bd * d.y);
    out.add_term(g, Scalar::approx(c.to_complex() * factor));
  }
  return out;
}

Element flow_expectation(const Element& a, int pa, int pb) {
  if (pa < 1 || pb < 1)
    throw PreconditionError("flow_expectation requires a, b >= 1");
  Element out(a.theta());
  for (const auto& [g, c] : a.terms()) {
    DegreeDiff d = g.degree_diff();
    if (static_cast<long>(pb) * d.x + static_cast<long>(pa) * d.y == 0)
      out.add_term(g, c);
  }
  return out;
}

Scalar omega_norm_sq(const Element& x) {
  return omega_product(adjoint(x), x);
}

}  // namespace twograph
