// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "twograph/classifier.hpp"
#include "twograph/element.hpp"
#include "twograph/expr.hpp"
#include "twograph/fixed_point.hpp"
#include "twograph/kms.hpp"
#include "twograph/matrix_rep.hpp"
#include "twograph/periodicity.hpp"
#include "twograph/theta.hpp"

using namespace twograph;

namespace {

constexpr unsigned kSeed = 12345;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

ThetaPtr wrap(ThetaSpec t) {
  return std::make_shared<const ThetaSpec>(std::move(t));
}

// id, flip where m == n, plus ten seeded random permutations.
std::vector<ThetaPtr> acceptance_family(int m, int n) {
  std::mt19937 rng(kSeed + 100u * static_cast<unsigned>(m) +
                   static_cast<unsigned>(n));
  std::vector<ThetaPtr> out;
  out.push_back(wrap(ThetaSpec::identity(m, n)));
  if (m == n) out.push_back(wrap(ThetaSpec::flip(m, n)));
  for (int t = 0; t < 10; ++t)
    out.push_back(wrap(ThetaSpec::random(m, n, rng)));
  return out;
}

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool criterion_1_kms_suite(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t checked = 0;
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const auto& theta : acceptance_family(m, n)) {
        SuiteOptions options;
        options.max_degree = 2;
        SuiteResult result = kms_suite(theta, options);
        checked += result.checked;
        if (!result.passed()) {
          detail = "nonzero residual found";
          return false;
        }
      }
  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "residual 0 on all %llu ordered generator pairs, %.1fs",
                static_cast<unsigned long long>(checked), elapsed);
  detail = buf;
  return elapsed < 120.0;
}

bool criterion_2_beta_scan(std::string& detail) {
  ThetaPtr theta = wrap(ThetaSpec::identity(2, 2));
  Element a = Element::generator(theta, Word::blue(1), Word{});
  Element b = adjoint(a);
  std::vector<Rational> betas = {Rational(-3), Rational(-2), Rational(-1),
                                 Rational(0), Rational(1)};
  std::vector<Rational> expected = {frac(3, 8), frac(1, 4), frac(0, 1),
                                    frac(-1, 2), frac(-3, 2)};
  auto scan = beta_scan(a, b, betas);
  for (std::size_t t = 0; t < scan.size(); ++t) {
    if (!(scan[t].residual == Scalar(expected[t]))) {
      detail = "residual mismatch at beta=" + betas[t].get_str();
      return false;
    }
    if (scan[t].residual.is_zero() != (betas[t] == -1)) {
      detail = "vanishing pattern wrong at beta=" + betas[t].get_str();
      return false;
    }
  }
  detail = "exact residuals {3/8, 1/4, 0, -1/2, -3/2}";
  return true;
}

bool criterion_3_classifier(std::string& detail) {
  FactorTypeReport r23 = classify(2, 3);
  if (r23.kind != FactorTypeReport::Kind::III_1) {
    detail = "(2,3) not III_1";
    return false;
  }
  FactorTypeReport r48 = classify(4, 8);
  double expected_t = 2.0 * std::numbers::pi / std::log(2.0);
  if (r48.kind != FactorTypeReport::Kind::III_lambda ||
      r48.dependence->a != 3 || r48.dependence->b != 2 ||
      *r48.lambda_float != 0.5 || r48.lambda_exact != "4^(-1/2)" ||
      std::abs(*r48.t_generator - expected_t) > 1e-12 * expected_t) {
    detail = "(4,8) report wrong";
    return false;
  }
  FactorTypeReport r22 = classify(2, 2);
  if (r22.kind != FactorTypeReport::Kind::III_lambda ||
      *r22.lambda_float != 0.5) {
    detail = "(2,2) not III_{1/2}";
    return false;
  }
  detail = "(2,3)=III_1, (4,8)=III_{0.5} with (a,b)=(3,2), (2,2)=III_{1/2}";
  return true;
}

bool criterion_4_spectrum(std::string& detail) {
  for (const Rational& v : spectrum_grid(4, 8, 3)) {
    if (!is_power_of_spectrum_base(v, 4, 8)) {
      detail = "grid value " + v.get_str() + " not a power of 2";
      return false;
    }
  }
  // Cross-check by direct exponent arithmetic: 4^x 8^y = 2^{2x+3y}.
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Rational direct = rational_power(2, 2L * x + 3L * y);
      Rational grid = rational_power(4, x) * rational_power(8, y);
      if (!(direct == grid)) {
        detail = "exponent arithmetic mismatch";
        return false;
      }
    }
  std::size_t distinct = spectrum_grid(2, 3, 3).size();
  if (distinct != 49) {
    detail = "(2,3) grid has " + std::to_string(distinct) + " values";
    return false;
  }
  detail = "(4,8) grid on powers of 2; (2,3) grid has 49 distinct values";
  return true;
}

bool criterion_5_unitary(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (int mn = 2; mn <= 3; ++mn) {
    ThetaPtr theta = wrap(ThetaSpec::identity(mn, mn));
    FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
    Element unit = Element::unit(theta);
    if (!equals(mul(u.element(), adjoint(u.element())), unit) ||
        !equals(mul(adjoint(u.element()), u.element()), unit)) {
      detail = "U not unitary at m=n=" + std::to_string(mn);
      return false;
    }
  }
  ThetaPtr theta48 = wrap(ThetaSpec::identity(4, 8));
  FlipUnitary u48 = FlipUnitary::lexicographic(theta48, 3, 2);
  Element unit48 = Element::unit(theta48);
  if (u48.element().term_count() != 64) {
    detail = "(4,8) flip unitary has wrong support";
    return false;
  }
  if (!equals(mul(u48.element(), adjoint(u48.element())), unit48) ||
      !equals(mul(adjoint(u48.element()), u48.element()), unit48)) {
    detail = "(4,8) U not unitary";
    return false;
  }
  double elapsed = seconds_since(start);
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "UU* = U*U = I for m=n=2,3 and (4,8) basis 64, %.1fs",
                elapsed);
  detail = buf;
  return elapsed < 60.0;
}

bool criterion_6_decomposition(std::string& detail) {
  std::mt19937 rng(kSeed);
  ThetaPtr theta = wrap(ThetaSpec::identity(2, 2));
  FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
  std::vector<Word> words = enumerate_words({1, 1}, *theta);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Element x(theta);
    for (int k = 0; k <= 2; ++k) {
      Element part(theta);
      for (int t = 0; t < 2; ++t)
        part.add_term(GenPair{words[pick(rng)], words[pick(rng)]},
                      Scalar(coeff(rng)));
      x += mul(part, u.power(k));
    }
    Decomposition d = decompose(x, u);
    for (const auto& [k, part] : d.parts) {
      if (!part.gauge_invariant() ||
          !equals(gauge_expectation(part), part)) {
        detail = "graded part not gauge invariant at trial " +
                 std::to_string(trial);
        return false;
      }
    }
    if (!equals(reassemble(d, u), x)) {
      detail = "reassembly mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "100 random fixed elements decompose and reassemble exactly";
  return true;
}

bool criterion_7_matrix_oracle(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t products = 0;
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const auto& theta : acceptance_family(m, n)) {
        std::vector<Word> words = enumerate_words({1, 1}, *theta);
        std::vector<GenPair> basis;
        for (const Word& u : words)
          for (const Word& v : words) basis.push_back(GenPair{u, v});
        Rational dim_inv(1, static_cast<long>(words.size()));
        dim_inv.canonicalize();
        for (const GenPair& g : basis) {
          Element x = Element::generator(theta, g.u, g.v);
          Scalar lhs = trace(x);
          Scalar rhs = rep(x, 1).trace_sum() * Scalar(dim_inv);
          if (!(lhs == rhs)) {
            detail = "trace mismatch on a basis unit";
            return false;
          }
        }
        for (const GenPair& ga : basis)
          for (const GenPair& gb : basis) {
            Element x = Element::generator(theta, ga.u, ga.v);
            Element y = Element::generator(theta, gb.u, gb.v);
            ++products;
            if (!oracle_mul_check(x, y, 1)) {
              detail = "rep not multiplicative";
              return false;
            }
          }
      }
  double elapsed = seconds_since(start);
  char buf[160];
  std::snprintf(
      buf, sizeof(buf),
      "rep multiplicative on %llu basis products, trace matches, %.1fs",
      static_cast<unsigned long long>(products), elapsed);
  detail = buf;
  return true;
}

bool criterion_8_periodicity(std::string& detail) {
  PeriodReport flip = find_period(wrap(ThetaSpec::flip(2, 2)), 4);
  if (!flip.periodic() || flip.a != 1 || flip.b != 1 || !flip.gamma) {
    detail = "flip not reported periodic at (1,1)";
    return false;
  }
  for (int i = 1; i <= 2; ++i)
    if (!(flip.gamma->at(Word::blue(i)) == Word::red(i))) {
      detail = "flip gamma is not e_i -> f_i";
      return false;
    }
  for (int mn = 2; mn <= 3; ++mn) {
    PeriodReport id_report =
        find_period(wrap(ThetaSpec::identity(mn, mn)), 4);
    if (id_report.verdict != PeriodReport::Verdict::AperiodicUpToBound ||
        id_report.bound != 4) {
      detail = "id at m=n=" + std::to_string(mn) + " not aperiodic up to 4";
      return false;
    }
  }
  PeriodReport indep = find_period(wrap(ThetaSpec::identity(2, 3)), 4);
  if (indep.verdict != PeriodReport::Verdict::AperiodicAlways) {
    detail = "(2,3) not reported unconditionally aperiodic";
    return false;
  }
  detail = "flip periodic with gamma(e_i)=f_i; id aperiodic to bound 4; "
           "(2,3) aperiodic unconditionally";
  return true;
}

bool criterion_9_modular_periodicity(std::string& detail) {
  ThetaPtr theta = wrap(ThetaSpec::identity(4, 8));
  double t0 = 2.0 * std::numbers::pi * 2.0 / std::log(4.0);
  double lm = std::log(4.0);
  double ln = std::log(8.0);
  // The flow phase depends only on the degree-diff class; sweeping the
  // classes with |x|,|y| <= 2 covers every generator with word degrees
  // <= (2,2).
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) {
      std::complex<double> phase =
          std::exp(std::complex<double>(0.0, t0 * (x * lm + y * ln)));
      if (std::abs(phase - std::complex<double>(1.0, 0.0)) > 1e-9) {
        detail = "phase off at degree-diff (" + std::to_string(x) + "," +
                 std::to_string(y) + ")";
        return false;
      }
    }
  // Spot-check through the element path as well.
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> kb(0, 2), kr(0, 2);
    std::uniform_int_distribution<int> bi(1, 4), ri(1, 8);
    Word u, v;
    for (int t = kb(rng); t > 0; --t) u.blues.push_back(bi(rng));
    for (int t = kr(rng); t > 0; --t) u.reds.push_back(ri(rng));
    for (int t = kb(rng); t > 0; --t) v.blues.push_back(bi(rng));
    for (int t = kr(rng); t > 0; --t) v.reds.push_back(ri(rng));
    Element g = Element::generator(theta, u, v);
    if (!equals(modular_flow(g, t0), g, 1e-9)) {
      detail = "flow does not fix a sampled generator";
      return false;
    }
  }
  detail = "flow at 2*pi*b/ln m fixes every degree class with |x|,|y| <= 2";
  return true;
}

bool criterion_10_trace_invariance(std::string& detail) {
  for (bool use_flip : {false, true}) {
    ThetaPtr theta = wrap(use_flip ? ThetaSpec::flip(2, 2)
                                   : ThetaSpec::identity(2, 2));
    FlipUnitary u = FlipUnitary::lexicographic(theta, 1, 1);
    std::vector<Word> words = enumerate_words({1, 1}, *theta);
    for (const Word& a : words)
      for (const Word& b : words) {
        Element x = Element::generator(theta, a, b);
        if (!(trace(conjugate(u, x)) == trace(x))) {
          detail = std::string("trace not preserved under conjugation, ") +
                   (use_flip ? "flip" : "id");
          return false;
        }
      }
  }
  detail = "trace(UXU*) = trace(X) exactly on the full level-1 basis, id "
           "and flip";
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"criterion-1 kms-suite", criterion_1_kms_suite},
      {"criterion-2 beta-scan", criterion_2_beta_scan},
      {"criterion-3 classifier", criterion_3_classifier},
      {"criterion-4 spectrum", criterion_4_spectrum},
      {"criterion-5 flip-unitary", criterion_5_unitary},
      {"criterion-6 decomposition", criterion_6_decomposition},
      {"criterion-7 matrix-oracle", criterion_7_matrix_oracle},
      {"criterion-8 periodicity", criterion_8_periodicity},
      {"criterion-9 modular-periodicity", criterion_9_modular_periodicity},
      {"criterion-10 trace-invariance", criterion_10_trace_invariance},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", c.name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
