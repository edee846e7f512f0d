#include "twograph/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twograph/errors.hpp"

namespace twograph {

std::string FactorTypeReport::to_text() const {
  std::ostringstream out;
  out << "m=" << m << "\n";
  out << "n=" << n << "\n";
  if (kind == Kind::III_1) {
    out << "kind=III_1\n";
  } else {
    out << "kind=III_lambda\n";
    out << "a=" << dependence->a << "\n";
    out << "b=" << dependence->b << "\n";
    out << "lambda_exact=" << lambda_exact << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", *lambda_float);
    out << "lambda_float=" << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", *t_generator);
    out << "t_generator=" << buf << "\n";
  }
  out << "spectrum_desc=" << spectrum_desc << "\n";
  if (unique_trace_assumed)
    out << "caveat=verdict assumes the flow fixed-point algebra has a unique "
           "trace\n";
  return out.str();
}

FactorTypeReport classify(long m, long n) {
  if (m < 2 || n < 2)
    throw PreconditionError("classification requires m, n >= 2");
  FactorTypeReport report;
  report.m = m;
  report.n = n;
  auto dep = mult_dependent(m, n);
  if (!dep) {
    report.kind = FactorTypeReport::Kind::III_1;
    report.spectrum_desc = "{0} u R_+";
    return report;
  }
  report.kind = FactorTypeReport::Kind::III_lambda;
  report.dependence = dep;
  report.lambda_exact =
      std::to_string(m) + "^(-1/" + std::to_string(dep->b) + ")";

  // Exact display value when m is a perfect b-th power.
  mpz_class base(m);
  mpz_class root;
  int exact_root =
      mpz_root(root.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(dep->b));
  if (exact_root)
    report.lambda_float = 1.0 / root.get_d();
  else
    report.lambda_float =
        std::pow(static_cast<double>(m), -1.0 / static_cast<double>(dep->b));

  report.t_generator = 2.0 * std::numbers::pi * static_cast<double>(dep->b) /
                       std::log(static_cast<double>(m));
  report.spectrum_desc = "{0} u {lambda^N : N in Z}";
  report.unique_trace_assumed = true;
  return report;
}

Rational modular_eigenvalue(const GenPair& g, const ThetaSpec& theta) {
  DegreeDiff d = -g.degree_diff();  // degree(v) - degree(u)
  return rational_power(theta.m(), d.x) * rational_power(theta.n(), d.y);
}

std::vector<Rational> spectrum_grid(long m, long n, int K) {
  if (m < 2 || n < 2)
    throw PreconditionError("spectrum grid requires m, n >= 2");
  if (K < 0) throw PreconditionError("spectrum grid requires K >= 0");
  std::vector<Rational> values;
  values.reserve((2 * K + 1) * (2 * K + 1));
  for (int x = -K; x <= K; ++x)
    for (int y = -K; y <= K; ++y)
      values.push_back(rational_power(m, x) * rational_power(n, y));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::optional<double> connes_t_generator(long m, long n) {
  auto dep = mult_dependent(m, n);
  if (!dep) return std::nullopt;
  return 2.0 * std::numbers::pi * static_cast<double>(dep->b) /
         std::log(static_cast<double>(m));
}

bool is_power_of_spectrum_base(const Rational& value, long m, long n) {
  auto dep = mult_dependent(m, n);
  if (!dep) return false;
  if (value <= 0) return false;
  // value == (m^{1/b})^N iff for every prime p^alpha of m the p-exponent
  // gamma of value satisfies b*gamma == N*alpha with one N across primes,
  // and value has no primes outside those of m.
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  std::optional<mpz_class> common_n;
  for (const auto& [p, alpha] : factorize(m)) {
    long gamma = 0;
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
      num /= static_cast<unsigned long>(p);
      ++gamma;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
      den /= static_cast<unsigned long>(p);
      --gamma;
    }
    mpz_class target = mpz_class(dep->b) * gamma;
    if (target % alpha != 0) return false;
    mpz_class candidate = target / alpha;
    if (!common_n)
      common_n = candidate;
    else if (*common_n != candidate)
      return false;
  }
  return num == 1 && den == 1;
}

}  // namespace twograph
