#include "twograph/matrix_rep.hpp"

#include <ostream>

#include "twograph/errors.hpp"

namespace twograph {

LevelBasis::LevelBasis(int k, const ThetaSpec& theta) : level(k) {
  if (k < 0) throw PreconditionError("level must be non-negative");
  std::uint64_t d = word_count({k, k}, theta);
  if (d > static_cast<std::uint64_t>(kMaxOracleDim))
    throw PreconditionError("oracle dimension (mn)^k exceeds the cap of " +
                            std::to_string(kMaxOracleDim));
  words = enumerate_words({k, k}, theta);
  for (int t = 0; t < static_cast<int>(words.size()); ++t)
    index.emplace(words[t], t);
}

DenseMatrix DenseMatrix::identity(int dim) {
  DenseMatrix m(dim);
  for (int r = 0; r < dim; ++r) m.at(r, r) = Scalar(1);
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionError("matrix dimension mismatch");
  DenseMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const Scalar& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) {
        const Scalar& w = o.at(k, c);
        if (!w.is_zero()) out.at(r, c) += v * w;
      }
    }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  if (dim_ != o.dim_) throw PreconditionError("matrix dimension mismatch");
  DenseMatrix out(dim_);
  for (int t = 0; t < dim_ * dim_; ++t) out.a_[t] = a_[t] + o.a_[t];
  return out;
}

DenseMatrix DenseMatrix::scaled(const Scalar& c) const {
  DenseMatrix out(dim_);
  for (int t = 0; t < dim_ * dim_; ++t) out.a_[t] = a_[t] * c;
  return out;
}

DenseMatrix DenseMatrix::conj_transpose() const {
  DenseMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

Scalar DenseMatrix::trace_sum() const {
  Scalar acc;
  for (int r = 0; r < dim_; ++r) acc += at(r, r);
  return acc;
}

void DenseMatrix::dump(std::ostream& out) const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      if (c) out << ' ';
      out << at(r, c).str();
    }
    out << '\n';
  }
}

DenseMatrix rep(const Element& x, int k) {
  if (!x.theta()) throw PreconditionError("element has no theta attached");
  if (!x.gauge_invariant())
    throw PreconditionError("rep requires a gauge-invariant element");
  if (x.min_level() > k)
    throw PreconditionError("level " + std::to_string(k) +
                            " is too small for this element");
  const ThetaSpec& theta = *x.theta();
  LevelBasis basis(k, theta);
  Element lx = level(x, k);
  DenseMatrix m(basis.dim());
  for (const auto& [g, c] : lx.terms())
    m.at(basis.index.at(g.u), basis.index.at(g.v)) += c;
  return m;
}

bool oracle_mul_check(const Element& x, const Element& y, int k) {
  DenseMatrix lhs = rep(mul(x, y), k);
  DenseMatrix rhs = rep(x, k) * rep(y, k);
  return lhs == rhs;
}

bool embed_check(const Element& x, int k) {
  if (!x.theta()) throw PreconditionError("element has no theta attached");
  const ThetaSpec& theta = *x.theta();
  DenseMatrix coarse = rep(x, k);
  DenseMatrix fine = rep(x, k + 1);
  LevelBasis bk(k, theta);
  LevelBasis bk1(k + 1, theta);
  DenseMatrix refined(bk1.dim());
  std::vector<Word> square = enumerate_words({1, 1}, theta);
  for (int r = 0; r < bk.dim(); ++r)
    for (int c = 0; c < bk.dim(); ++c) {
      const Scalar& v = coarse.at(r, c);
      if (v.is_zero()) continue;
      for (const Word& w : square) {
        int rr = bk1.index.at(concat(bk.words[r], w, theta));
        int cc = bk1.index.at(concat(bk.words[c], w, theta));
        refined.at(rr, cc) += v;
      }
    }
  return fine == refined;
}

std::vector<Scalar> char_poly(const DenseMatrix& m) {
  int n = m.dim();
  std::vector<Scalar> coeffs(n + 1);
  coeffs[0] = Scalar(1);
  DenseMatrix mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{k-1} I)
    DenseMatrix shifted = mk + DenseMatrix::identity(n).scaled(coeffs[k - 1]);
    mk = m * shifted;
    Rational inv_k(-1, k);
    inv_k.canonicalize();
    coeffs[k] = mk.trace_sum() * Scalar(inv_k);
  }
  return coeffs;
}

}  // namespace twograph
