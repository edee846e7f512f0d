#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twograph/element.hpp"
#include "twograph/periodicity.hpp"

namespace twograph {

// Factor-type verdict computed from (m, n) alone.
struct FactorTypeReport {
  enum class Kind { III_1, III_lambda };

  Kind kind = Kind::III_1;
  long m = 0;
  long n = 0;
  // Present exactly in the III_lambda case.
  std::optional<PeriodCandidate> dependence;
  // lambda is kept symbolically as m^(-1/b); the float value is display
  // only (exact when m is a perfect b-th power).
  std::string lambda_exact;
  std::optional<double> lambda_float;
  std::optional<double> t_generator;  // 2*pi*b / ln m
  std::string spectrum_desc;
  // The III_lambda verdict relies on the fixed-point algebra of the flow
  // having a unique trace, which this workbench cannot decide.
  bool unique_trace_assumed = false;

  std::string to_text() const;  // line-oriented key=value report
};

// Type dichotomy: III_1 when m and n are multiplicatively independent,
// III_{m^{-1/b}} when m^a == n^b with gcd(a,b) == 1.  Requires m, n >= 2.
FactorTypeReport classify(long m, long n);

// Eigenvalue of the modular operator on s_u s_v*: m^x n^y with
// (x,y) = degree(v) - degree(u), as an exact rational.
Rational modular_eigenvalue(const GenPair& g, const ThetaSpec& theta);

// Sorted distinct values { m^x n^y : |x|,|y| <= K }, exact.
std::vector<Rational> spectrum_grid(long m, long n, int K);

// Generator of the intersection (2*pi/ln m)Z with (2*pi/ln n)Z, when the
// intersection is nontrivial; nothing in the III_1 case.
std::optional<double> connes_t_generator(long m, long n);

// Exact check that value == (m^{1/b})^N for some integer N; meaningful
// when m^a == n^b.  Exposed for the spectrum tests.
bool is_power_of_spectrum_base(const Rational& value, long m, long n);

}  // namespace twograph
