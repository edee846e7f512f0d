#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twograph/element.hpp"

namespace twograph {

// Exact prime factorization by trial division; v must lie in [2, 10^6].
std::vector<std::pair<long, int>> factorize(long v);

// Minimal coprime (a,b) with m^a == n^b.
struct PeriodCandidate {
  long a = 0;
  long b = 0;
};

// Decides multiplicative dependence of m and n by comparing prime
// exponent vectors; never by floating-point logarithms.  Requires
// m, n >= 2.  Returns the minimal coprime solution, or nothing when the
// two are multiplicatively independent.
std::optional<PeriodCandidate> mult_dependent(long m, long n);

// Desk-scale cap on m^a, the number of blue words a candidate must
// compare; candidates beyond it are not searched.
inline constexpr std::uint64_t kMaxPeriodBasis = 1u << 16;

// Candidate bijection blue-words(a) -> red-words(b) extracted from the
// red-first refactorization e_u f_v = f_{v'} e_{u'}.  Succeeds only when
// the red prefix v' depends on u alone, the blue suffix u' depends on v
// alone, and both induced maps are bijective; any failure certifies that
// the candidate degree carries no period.
using WordBijection = std::map<Word, Word>;
std::optional<WordBijection> derive_gamma(int a, int b,
                                          const ThetaSpec& theta);

// The flip element of a bijection gamma: sum over blue words u of length a
// of s_{e_u} s_{f_{gamma(u)}}*.
Element flip_element(const WordBijection& gamma, const ThetaPtr& theta);

// True iff derive_gamma succeeds and the resulting flip element commutes
// symbolically with every generator s_{e_i}, s_{f_j}.  Requires m^a == n^b.
bool check_period(int a, int b, const ThetaPtr& theta);

struct PeriodReport {
  enum class Verdict {
    Periodic,             // period degree (a,-b) witnessed by gamma
    AperiodicUpToBound,   // no period found for k*(a,b), k <= bound
    AperiodicAlways,      // m, n multiplicatively independent
  };

  Verdict verdict = Verdict::AperiodicAlways;
  int a = 0;
  int b = 0;
  int bound = 0;  // multiples actually searched
  std::optional<WordBijection> gamma;

  bool periodic() const { return verdict == Verdict::Periodic; }
};

// Searches k*(a0,b0) for k = 1..bound where (a0,b0) is the minimal
// dependence; reports unconditional aperiodicity when there is none.
// Candidates whose basis exceeds kMaxPeriodBasis end the search early,
// with report.bound recording the last multiple actually checked.
PeriodReport find_period(const ThetaPtr& theta, int bound);

}  // namespace twograph
