#include "twograph/word.hpp"

#include <cmath>

#include "twograph/errors.hpp"

namespace twograph {

Degree subtract(Degree a, Degree b) {
  if (!dominated_by(b, a))
    throw PreconditionError("degree subtraction would go negative");
  return {a.blue - b.blue, a.red - b.red};
}

std::string Word::str() const {
  std::string out;
  for (int i : blues) {
    if (!out.empty()) out += ' ';
    out += 'e';
    out += std::to_string(i);
  }
  for (int j : reds) {
    if (!out.empty()) out += ' ';
    out += 'f';
    out += std::to_string(j);
  }
  return out;
}

LetterVec letters_of(const Word& w) {
  LetterVec out;
  out.reserve(w.length());
  for (int i : w.blues) out.push_back(Letter::blue(i));
  for (int j : w.reds) out.push_back(Letter::red(j));
  return out;
}

namespace {

// Swap letters[t] and letters[t+1] through the commutation relation.
// Blue-red order applies theta, red-blue applies theta inverse.
void swap_adjacent(LetterVec& letters, std::size_t t, const ThetaSpec& theta) {
  Letter& a = letters[t];
  Letter& b = letters[t + 1];
  if (a.color == Color::Blue && b.color == Color::Red) {
    auto [ii, jj] = theta.apply(a.index, b.index);
    a = Letter::red(jj);
    b = Letter::blue(ii);
  } else if (a.color == Color::Red && b.color == Color::Blue) {
    auto [i, j] = theta.invert(b.index, a.index);
    a = Letter::blue(i);
    b = Letter::red(j);
  } else {
    throw PreconditionError("cannot commute two letters of the same color");
  }
}

void check_letters(std::span<const Letter> letters, const ThetaSpec& theta) {
  for (const Letter& l : letters) {
    if (l.color == Color::Blue) {
      if (l.index < 1 || l.index > theta.m())
        throw PreconditionError("blue index out of range: e" +
                                std::to_string(l.index));
    } else if (l.index < 1 || l.index > theta.n()) {
      throw PreconditionError("red index out of range: f" +
                              std::to_string(l.index));
    }
  }
}

Word word_from_pattern_letters(const LetterVec& letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.color == Color::Blue)
      w.blues.push_back(l.index);
    else
      w.reds.push_back(l.index);
  }
  return w;
}

}  // namespace

void rewrite_to_pattern(LetterVec& letters, std::span<const Color> pattern,
                        const ThetaSpec& theta) {
  if (letters.size() != pattern.size())
    throw PreconditionError("pattern length mismatch");
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    if (letters[pos].color == pattern[pos]) continue;
    std::size_t q = pos + 1;
    while (q < letters.size() && letters[q].color != pattern[pos]) ++q;
    if (q == letters.size())
      throw PreconditionError("pattern color counts do not match the word");
    for (std::size_t t = q; t > pos; --t) swap_adjacent(letters, t - 1, theta);
  }
}

Word normalize(std::span<const Letter> letters, const ThetaSpec& theta) {
  check_letters(letters, theta);
  LetterVec buf(letters.begin(), letters.end());
  int k = 0;
  for (const Letter& l : buf)
    if (l.color == Color::Blue) ++k;
  boost::container::small_vector<Color, 16> pattern(buf.size(), Color::Red);
  std::fill(pattern.begin(), pattern.begin() + k, Color::Blue);
  rewrite_to_pattern(buf, {pattern.data(), pattern.size()}, theta);
  return word_from_pattern_letters(buf);
}

std::pair<Word, Word> factor(const Word& w, Degree p, const ThetaSpec& theta) {
  Degree d = w.degree();
  if (!dominated_by(p, d))
    throw PreconditionError("factor degree exceeds the degree of the word");
  LetterVec buf = letters_of(w);
  boost::container::small_vector<Color, 16> pattern;
  pattern.reserve(buf.size());
  // prefix in normal form, then suffix in normal form
  pattern.insert(pattern.end(), p.blue, Color::Blue);
  pattern.insert(pattern.end(), p.red, Color::Red);
  pattern.insert(pattern.end(), d.blue - p.blue, Color::Blue);
  pattern.insert(pattern.end(), d.red - p.red, Color::Red);
  rewrite_to_pattern(buf, {pattern.data(), pattern.size()}, theta);

  Word head, tail;
  std::size_t cut = static_cast<std::size_t>(p.total());
  for (std::size_t t = 0; t < buf.size(); ++t) {
    Word& dst = t < cut ? head : tail;
    if (buf[t].color == Color::Blue)
      dst.blues.push_back(buf[t].index);
    else
      dst.reds.push_back(buf[t].index);
  }
  return {std::move(head), std::move(tail)};
}

Word concat(const Word& a, const Word& b, const ThetaSpec& theta) {
  // Only b's blue letters have to cross a's red letters.
  Word out;
  out.blues = a.blues;
  if (b.blues.empty()) {
    out.reds = a.reds;
  } else if (a.reds.empty()) {
    out.blues.insert(out.blues.end(), b.blues.begin(), b.blues.end());
    out.reds = b.reds;
    return out;
  } else {
    LetterVec buf;
    buf.reserve(a.reds.size() + b.blues.size());
    for (int j : a.reds) buf.push_back(Letter::red(j));
    for (int i : b.blues) buf.push_back(Letter::blue(i));
    boost::container::small_vector<Color, 16> pattern(buf.size(), Color::Red);
    std::fill(pattern.begin(), pattern.begin() + b.blues.size(), Color::Blue);
    rewrite_to_pattern(buf, {pattern.data(), pattern.size()}, theta);
    for (std::size_t t = 0; t < b.blues.size(); ++t)
      out.blues.push_back(buf[t].index);
    for (std::size_t t = b.blues.size(); t < buf.size(); ++t)
      out.reds.push_back(buf[t].index);
  }
  out.reds.insert(out.reds.end(), b.reds.begin(), b.reds.end());
  return out;
}

std::vector<Word> enumerate_words(Degree p, const ThetaSpec& theta) {
  std::vector<Word> out;
  out.reserve(word_count(p, theta));
  for_each_word(p, theta, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t word_count(Degree p, const ThetaSpec& theta) {
  std::uint64_t c = 1;
  auto mul_sat = [&c](std::uint64_t f) {
    if (c > UINT64_MAX / f) c = UINT64_MAX;
    else c *= f;
  };
  for (int t = 0; t < p.blue; ++t) mul_sat(static_cast<std::uint64_t>(theta.m()));
  for (int t = 0; t < p.red; ++t) mul_sat(static_cast<std::uint64_t>(theta.n()));
  return c;
}

}  // namespace twograph
