#include "twograph/periodicity.hpp"

#include <numeric>

#include "twograph/errors.hpp"

namespace twograph {

std::vector<std::pair<long, int>> factorize(long v) {
  if (v < 2) throw PreconditionError("factorize requires v >= 2");
  if (v > 1000000)
    throw PreconditionError("factorize caps its input at 10^6");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    int e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

std::optional<PeriodCandidate> mult_dependent(long m, long n) {
  if (m < 2 || n < 2)
    throw PreconditionError("multiplicative dependence requires m, n >= 2");
  auto fm = factorize(m);
  auto fn = factorize(n);
  if (fm.size() != fn.size()) return std::nullopt;
  for (std::size_t t = 0; t < fm.size(); ++t)
    if (fm[t].first != fn[t].first) return std::nullopt;
  // m^a = n^b iff a*alpha_p == b*beta_p for every prime p; the exponent
  // vectors must be proportional with ratio b/a = alpha_1/beta_1.
  long alpha1 = fm[0].second;
  long beta1 = fn[0].second;
  long g = std::gcd(alpha1, beta1);
  PeriodCandidate c{beta1 / g, alpha1 / g};
  for (std::size_t t = 0; t < fm.size(); ++t)
    if (c.a * fm[t].second != c.b * fn[t].second) return std::nullopt;
  return c;
}

namespace {

// Red-first refactorization e_u f_v = f_{v'} e_{u'} of a blue word u and a
// red word v.
std::pair<Word, Word> red_first(const Word& blue, const Word& red,
                                const ThetaSpec& theta) {
  LetterVec buf;
  buf.reserve(blue.blues.size() + red.reds.size());
  for (int i : blue.blues) buf.push_back(Letter::blue(i));
  for (int j : red.reds) buf.push_back(Letter::red(j));
  boost::container::small_vector<Color, 16> pattern(buf.size(), Color::Blue);
  std::fill(pattern.begin(), pattern.begin() + red.reds.size(), Color::Red);
  rewrite_to_pattern(buf, {pattern.data(), pattern.size()}, theta);
  Word vprime, uprime;
  for (std::size_t t = 0; t < buf.size(); ++t) {
    if (t < red.reds.size())
      vprime.reds.push_back(buf[t].index);
    else
      uprime.blues.push_back(buf[t].index);
  }
  return {std::move(vprime), std::move(uprime)};
}

}  // namespace

std::optional<WordBijection> derive_gamma(int a, int b,
                                          const ThetaSpec& theta) {
  if (word_count({a, 0}, theta) > kMaxPeriodBasis ||
      word_count({0, b}, theta) > kMaxPeriodBasis)
    throw PreconditionError("period candidate basis exceeds the cap of " +
                            std::to_string(kMaxPeriodBasis));
  std::vector<Word> blue_words = enumerate_words({a, 0}, theta);
  std::vector<Word> red_words = enumerate_words({0, b}, theta);
  if (blue_words.size() != red_words.size()) return std::nullopt;

  WordBijection gamma;
  std::map<Word, Word> blue_of_red;  // induced map on red words
  std::map<Word, int> prefix_seen;
  for (const Word& u : blue_words) {
    std::optional<Word> common;
    for (const Word& v : red_words) {
      auto [vprime, uprime] = red_first(u, v, theta);
      if (!common)
        common = vprime;
      else if (!(*common == vprime))
        return std::nullopt;  // red prefix depends on v
      auto [it, fresh] = blue_of_red.try_emplace(v, uprime);
      if (!fresh && !(it->second == uprime))
        return std::nullopt;  // blue suffix depends on u
    }
    if (++prefix_seen[*common] > 1) return std::nullopt;  // not injective
    gamma.emplace(u, *common);
  }
  // Counting makes the induced red->blue map bijective as well once it is
  // well defined; check injectivity anyway.
  std::map<Word, int> suffix_seen;
  for (const auto& [v, u] : blue_of_red)
    if (++suffix_seen[u] > 1) return std::nullopt;
  return gamma;
}

Element flip_element(const WordBijection& gamma, const ThetaPtr& theta) {
  Element out(theta);
  for (const auto& [u, v] : gamma) out.add_term(GenPair{u, v}, Scalar(1));
  return out;
}

bool check_period(int a, int b, const ThetaPtr& theta) {
  if (!theta) throw PreconditionError("check_period requires a theta spec");
  auto gamma = derive_gamma(a, b, *theta);
  if (!gamma) return false;
  Element w = flip_element(*gamma, theta);
  for (int i = 1; i <= theta->m(); ++i) {
    Element g = Element::generator(theta, Word::blue(i), Word{});
    if (!equals(mul(w, g), mul(g, w))) return false;
  }
  for (int j = 1; j <= theta->n(); ++j) {
    Element g = Element::generator(theta, Word::red(j), Word{});
    if (!equals(mul(w, g), mul(g, w))) return false;
  }
  return true;
}

PeriodReport find_period(const ThetaPtr& theta, int bound) {
  if (!theta) throw PreconditionError("find_period requires a theta spec");
  if (bound < 1) throw PreconditionError("search bound must be >= 1");
  PeriodReport report;
  report.bound = bound;
  auto cand = mult_dependent(theta->m(), theta->n());
  if (!cand) {
    report.verdict = PeriodReport::Verdict::AperiodicAlways;
    return report;
  }
  for (int k = 1; k <= bound; ++k) {
    int a = static_cast<int>(k * cand->a);
    int b = static_cast<int>(k * cand->b);
    if (word_count({a, 0}, *theta) > kMaxPeriodBasis ||
        word_count({0, b}, *theta) > kMaxPeriodBasis) {
      report.bound = k - 1;
      break;
    }
    if (check_period(a, b, theta)) {
      report.verdict = PeriodReport::Verdict::Periodic;
      report.a = a;
      report.b = b;
      report.gamma = derive_gamma(a, b, *theta);
      return report;
    }
  }
  report.verdict = PeriodReport::Verdict::AperiodicUpToBound;
  return report;
}

}  // namespace twograph
