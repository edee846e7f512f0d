#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "twograph/element.hpp"

namespace twograph {

// Lexicographic basis of the level-k matrix algebra: all words of degree
// (k,k).  Its span is a full matrix algebra of size (mn)^k.
struct LevelBasis {
  int level = 0;
  std::vector<Word> words;
  std::map<Word, int> index;

  LevelBasis(int k, const ThetaSpec& theta);
  int dim() const { return static_cast<int>(words.size()); }
};

// Dense square matrix over Scalar; exact rational entries in oracle use.
class DenseMatrix {
 public:
  explicit DenseMatrix(int dim) : dim_(dim), a_(dim * dim) {}
  static DenseMatrix identity(int dim);

  int dim() const { return dim_; }
  Scalar& at(int r, int c) { return a_[r * dim_ + c]; }
  const Scalar& at(int r, int c) const { return a_[r * dim_ + c]; }

  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix scaled(const Scalar& c) const;
  DenseMatrix conj_transpose() const;
  Scalar trace_sum() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

  void dump(std::ostream& out) const;  // row-major, exact "p/q" entries

 private:
  int dim_;
  std::vector<Scalar> a_;
};

// Hard cap on oracle dimensions; (mn)^k must stay within it.
inline constexpr int kMaxOracleDim = 4096;

// Matrix realization of a gauge-invariant element at level k:
// s_u s_v* with degree(u) = degree(v) = (k,k) maps to the matrix unit
// E_{u,v}; lower terms are leveled up first.
DenseMatrix rep(const Element& x, int k);

// rep(x*y) == rep(x)*rep(y), entrywise exact.
bool oracle_mul_check(const Element& x, const Element& y, int k);

// rep at level k+1 equals the block-diagonal refinement of rep at level k
// under E_{u,v} -> sum over w of degree (1,1) of E_{uw,vw}.
bool embed_check(const Element& x, int k);

// Exact characteristic polynomial coefficients c_0..c_dim of
// det(tI - M) = t^dim + c_1 t^{dim-1} + ... + c_dim, computed by the
// Faddeev-LeVerrier recursion.  Requires exact entries.
std::vector<Scalar> char_poly(const DenseMatrix& m);

}  // namespace twograph
