#pragma once

#include <algorithm>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twograph/theta.hpp"

namespace twograph {

// Bidegree (k,l): k blue letters, l red letters.
struct Degree {
  int blue = 0;
  int red = 0;

  friend Degree operator+(Degree a, Degree b) {
    return {a.blue + b.blue, a.red + b.red};
  }
  friend bool operator==(Degree, Degree) = default;
  int total() const { return blue + red; }
};

// Componentwise partial order and lattice operations.
inline bool dominated_by(Degree a, Degree b) {
  return a.blue <= b.blue && a.red <= b.red;
}
inline Degree join(Degree a, Degree b) {
  return {a.blue > b.blue ? a.blue : b.blue, a.red > b.red ? a.red : b.red};
}
// Requires b componentwise <= a.
Degree subtract(Degree a, Degree b);

// Difference of two bidegrees; components may be negative.
struct DegreeDiff {
  int x = 0;
  int y = 0;

  friend DegreeDiff operator+(DegreeDiff a, DegreeDiff b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend DegreeDiff operator-(DegreeDiff a) { return {-a.x, -a.y}; }
  friend bool operator==(DegreeDiff, DegreeDiff) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

inline DegreeDiff diff(Degree a, Degree b) {
  return {a.blue - b.blue, a.red - b.red};
}

using IndexVec = boost::container::small_vector<int, 8>;

// Element of the 2-graph semigroup in blue-first normal form: the blue
// letter indices followed by the red letter indices.  The empty word is
// the semigroup identity.
struct Word {
  IndexVec blues;
  IndexVec reds;

  Degree degree() const {
    return {static_cast<int>(blues.size()), static_cast<int>(reds.size())};
  }
  int length() const { return static_cast<int>(blues.size() + reds.size()); }
  bool empty() const { return blues.empty() && reds.empty(); }

  static Word blue(int i) { return Word{{i}, {}}; }
  static Word red(int j) { return Word{{}, {j}}; }
  static Word blue_word(IndexVec is) { return Word{std::move(is), {}}; }
  static Word red_word(IndexVec js) { return Word{{}, std::move(js)}; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.blues == b.blues && a.reds == b.reds;
  }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.blues != b.blues)
      return std::lexicographical_compare(a.blues.begin(), a.blues.end(),
                                          b.blues.begin(), b.blues.end());
    return std::lexicographical_compare(a.reds.begin(), a.reds.end(),
                                        b.reds.begin(), b.reds.end());
  }

  // e.g. "e1 f2 f1"; the empty word prints as "".
  std::string str() const;
};

enum class Color : std::uint8_t { Blue, Red };

// One tagged letter of an unnormalized word.
struct Letter {
  Color color;
  int index;

  static Letter blue(int i) { return {Color::Blue, i}; }
  static Letter red(int j) { return {Color::Red, j}; }
  friend bool operator==(Letter, Letter) = default;
};

using LetterVec = boost::container::small_vector<Letter, 16>;

// Rewrite a letter sequence into the prescribed color pattern, applying the
// commutation relation at every adjacent transposition.  `pattern` must
// hold the same number of Blue/Red tags as `letters`.
void rewrite_to_pattern(LetterVec& letters, std::span<const Color> pattern,
                        const ThetaSpec& theta);

LetterVec letters_of(const Word& w);

// Blue-first normal form of an arbitrary letter sequence.
Word normalize(std::span<const Letter> letters, const ThetaSpec& theta);

inline Word normalize(const LetterVec& letters, const ThetaSpec& theta) {
  return normalize(std::span<const Letter>(letters.data(), letters.size()),
                   theta);
}

// Unique factorization w = w1 * w2 with degree(w1) == p.
// Requires p componentwise <= degree(w).
std::pair<Word, Word> factor(const Word& w, Degree p, const ThetaSpec& theta);

// Semigroup product in normal form; degrees add.
Word concat(const Word& a, const Word& b, const ThetaSpec& theta);

// All m^p.blue * n^p.red words of degree p, in lexicographic order
// (blue indices first, then red indices).
std::vector<Word> enumerate_words(Degree p, const ThetaSpec& theta);

// m^p.blue * n^p.red.
std::uint64_t word_count(Degree p, const ThetaSpec& theta);

// Streaming variant of enumerate_words, same order.  The callback receives
// a scratch word that must not be retained across calls.
template <typename Fn>
void for_each_word(Degree p, const ThetaSpec& theta, Fn&& fn) {
  Word w;
  w.blues.assign(p.blue, 1);
  w.reds.assign(p.red, 1);
  auto advance = [](IndexVec& digits, int radix) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      if (*it < radix) {
        ++*it;
        return true;
      }
      *it = 1;
    }
    return false;
  };
  for (;;) {
    fn(static_cast<const Word&>(w));
    if (!advance(w.reds, theta.n()) && !advance(w.blues, theta.m())) break;
  }
}

}  // namespace twograph
