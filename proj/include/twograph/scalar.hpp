#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace twograph {

using Rational = mpq_class;

// base^exp as an exact rational; base >= 1, exp of either sign.
Rational rational_power(long base, long exp);

// Coefficient of a symbolic element: an exact complex rational, or a
// complex double once a real-time flow has been applied.  Exact scalars
// support decidable equality; float scalars compare within a tolerance.
class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(int v) : exact_(true), re_(v) {}
  Scalar(const Rational& re) : exact_(true), re_(re) {}
  Scalar(Rational re, Rational im)
      : exact_(true), re_(std::move(re)), im_(std::move(im)) {}

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }
  static Scalar approx(std::complex<double> z) {
    Scalar s;
    s.exact_ = false;
    s.f_ = z;
    return s;
  }

  bool is_exact() const { return exact_; }
  bool is_zero() const {
    return exact_ ? re_ == 0 && im_ == 0 : f_ == std::complex<double>{};
  }

  // Exact accessors; only meaningful in exact mode.
  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  std::complex<double> to_complex() const {
    return exact_ ? std::complex<double>(re_.get_d(), im_.get_d()) : f_;
  }

  Scalar conj() const {
    if (exact_) return Scalar(re_, Rational(-im_));
    return approx(std::conj(f_));
  }

  Scalar operator-() const {
    if (exact_) return Scalar(Rational(-re_), Rational(-im_));
    return approx(-f_);
  }

  Scalar& operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
      re_ += o.re_;
      im_ += o.im_;
    } else {
      *this = approx(to_complex() + o.to_complex());
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    if (exact_ && o.exact_) {
      Rational re = re_ * o.re_ - im_ * o.im_;
      Rational im = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(re);
      im_ = std::move(im);
    } else {
      *this = approx(to_complex() * o.to_complex());
    }
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  // Exact equality in exact mode, tolerance otherwise.
  bool equal(const Scalar& o, double tol) const {
    if (exact_ && o.exact_) return re_ == o.re_ && im_ == o.im_;
    return std::abs(to_complex() - o.to_complex()) <= tol;
  }

  // Strict structural equality (exact mode only).
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ != b.exact_) return false;
    if (a.exact_) return a.re_ == b.re_ && a.im_ == b.im_;
    return a.f_ == b.f_;
  }

  std::string str() const;

 private:
  bool exact_;
  Rational re_;
  Rational im_;
  std::complex<double> f_{};
};

}  // namespace twograph
