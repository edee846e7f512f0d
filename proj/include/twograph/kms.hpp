#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "twograph/element.hpp"

namespace twograph {

// One equilibrium-condition residual omega(AB) - omega(B sigma_{i beta}(A)).
struct KmsResidual {
  Element a;
  Element b;
  Rational beta;
  Scalar residual;
};

// Residual at inverse temperature beta; exact for integer beta.
Scalar kms_residual(const Element& a, const Element& b, const Rational& beta);

// Residual at the distinguished value beta = -1; identically zero is the
// equilibrium property of the state.
Scalar kms_check(const Element& a, const Element& b);

std::vector<KmsResidual> beta_scan(const Element& a, const Element& b,
                                   std::span<const Rational> betas);

// Identity-permutation vanishing identities: omega kills every mixed
// product s_{f_v}^{+-1} s_{e_u}^{+-1} with nonempty u and v, and the
// defect-free self-consistency sum holds.  Requires theta == id.
bool id_vanishing_check(const ThetaPtr& theta);

// Product-state identity for theta == id:
// omega(s_{e_{u1} f_{v1}} s_{e_{u2} f_{v2}}*) ==
// [u1==u2] m^{-|u1|} * [v1==v2] n^{-|v1|} for all words up to maxdeg.
bool tensor_split_check(const ThetaPtr& theta, int maxdeg);

// All standard generators s_u s_v* with degree(u) + degree(v)
// componentwise <= (d, d): at most d letters of each color in total.
std::vector<GenPair> standard_generators_total_degree(const ThetaSpec& theta,
                                                      int d);

// All standard generators with degree(u) <= (d, d) and degree(v) <= (d, d).
std::vector<GenPair> standard_generators_word_degree(const ThetaSpec& theta,
                                                     int d);

struct SuiteOptions {
  int max_degree = 2;   // total-degree bound on each generator
  unsigned threads = 0; // 0 = hardware concurrency
};

struct SuiteFailure {
  GenPair a;
  GenPair b;
  Scalar residual;
};

struct SuiteResult {
  std::uint64_t checked = 0;
  std::vector<SuiteFailure> failures;  // deterministic order, capped
  bool passed() const { return failures.empty(); }
};

// Runs kms_check over every ordered pair of standard generators within
// the bound; shards across threads, result order independent of the
// sharding.
SuiteResult kms_suite(const ThetaPtr& theta, const SuiteOptions& options);

// Streaming single-threaded variant for report generation: the callback
// sees every ordered pair and its residual in enumeration order.
void kms_suite_stream(
    const ThetaPtr& theta, int max_degree,
    const std::function<void(const GenPair&, const GenPair&, const Scalar&)>&
        fn);

}  // namespace twograph
