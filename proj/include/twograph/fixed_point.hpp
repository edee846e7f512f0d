#pragma once

#include <map>

#include "twograph/element.hpp"
#include "twograph/periodicity.hpp"

namespace twograph {

// The unitary sum over blue words u of length a of s_{e_u} s_{f_{j(u)}}*
// for a bijection j between blue words of length a and red words of
// length b; exists exactly when m^a == n^b.  Conjugation by it restricts
// to an automorphism of the gauge-invariant core, and its integer powers
// grade the fixed-point algebra of the modular flow.
class FlipUnitary {
 public:
  // Deterministic default: the order isomorphism between the two
  // lexicographically sorted word lists.
  static FlipUnitary lexicographic(const ThetaPtr& theta, int a, int b);
  static FlipUnitary with_bijection(const ThetaPtr& theta, int a, int b,
                                    WordBijection jmath);

  int a() const { return a_; }
  int b() const { return b_; }
  const WordBijection& bijection() const { return jmath_; }
  const Element& element() const { return element_; }
  const ThetaPtr& theta() const { return element_.theta(); }

  // U^k for any integer k; negative powers are adjoint powers.
  Element power(int k) const;

 private:
  FlipUnitary(int a, int b, WordBijection jmath, Element element)
      : a_(a), b_(b), jmath_(std::move(jmath)), element_(std::move(element)) {}

  int a_;
  int b_;
  WordBijection jmath_;
  Element element_;
};

// Ad(U) restricted to the gauge-invariant core: U x U*.  Requires x to be
// gauge invariant; the image is again gauge invariant.
Element conjugate(const FlipUnitary& u, const Element& x);

// True iff every term's degree-diff lies on the line Z*(a,-b).
bool in_flow_fixed_algebra(const Element& x, int a, int b);

// Z-grading of a fixed-point element: parts[k] is gauge invariant and
// sum over k of parts[k] * U^k reassembles the input.
struct Decomposition {
  std::map<int, Element> parts;
};

Decomposition decompose(const Element& x, const FlipUnitary& u);

Element reassemble(const Decomposition& d, const FlipUnitary& u);

// Expectation onto the gauge-invariant core: the k = 0 graded part.
// Requires x to lie in the fixed-point algebra of the flow.
Element core_expectation(const Element& x, const FlipUnitary& u);

}  // namespace twograph
