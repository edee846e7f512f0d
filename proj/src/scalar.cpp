#include "twograph/scalar.hpp"

#include <cstdio>

#include "twograph/errors.hpp"

namespace twograph {

Rational rational_power(long base, long exp) {
  if (base < 1) throw PreconditionError("rational_power requires base >= 1");
  mpz_class b(base);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(),
             static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp >= 0) return Rational(p);
  Rational r(1, p);
  r.canonicalize();
  return r;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string Scalar::str() const {
  if (exact_) {
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) return im_.get_str() + "i";
    return re_.get_str() + (im_ > 0 ? "+" : "") + im_.get_str() + "i";
  }
  if (f_.imag() == 0.0) return format_double(f_.real());
  std::string s = format_double(f_.real());
  if (f_.imag() >= 0.0) s += "+";
  return s + format_double(f_.imag()) + "i";
}

}  // namespace twograph
