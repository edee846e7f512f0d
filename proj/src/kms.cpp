#include "twograph/kms.hpp"

#include <future>
#include <thread>

#include "twograph/errors.hpp"

namespace twograph {

Scalar kms_residual(const Element& a, const Element& b, const Rational& beta) {
  return omega_product(a, b) - omega_product(b, modular_flow_imag(a, beta));
}

Scalar kms_check(const Element& a, const Element& b) {
  return kms_residual(a, b, Rational(-1));
}

std::vector<KmsResidual> beta_scan(const Element& a, const Element& b,
                                   std::span<const Rational> betas) {
  std::vector<KmsResidual> out;
  out.reserve(betas.size());
  for (const Rational& beta : betas)
    out.push_back({a, b, beta, kms_residual(a, b, beta)});
  return out;
}

namespace {

void require_identity(const ThetaPtr& theta) {
  if (!theta) throw PreconditionError("missing theta spec");
  if (!theta->is_identity())
    throw PreconditionError(
        "this check is only defined for the identity permutation");
}

}  // namespace

bool id_vanishing_check(const ThetaPtr& theta) {
  require_identity(theta);
  const ThetaSpec& t = *theta;
  std::vector<Word> blue_words;
  std::vector<Word> red_words;
  for (int len = 1; len <= 2; ++len) {
    for (const Word& w : enumerate_words({len, 0}, t)) blue_words.push_back(w);
    for (const Word& w : enumerate_words({0, len}, t)) red_words.push_back(w);
  }

  Scalar zero;
  for (const Word& u : blue_words) {
    Element e = Element::generator(theta, u, Word{});
    Element e_star = adjoint(e);
    for (const Word& v : red_words) {
      Element f = Element::generator(theta, v, Word{});
      Element f_star = adjoint(f);
      if (!omega_product(f_star, e).equal(zero, 0)) return false;
      if (!omega_product(f, e).equal(zero, 0)) return false;
      if (!omega_product(f, e_star).equal(zero, 0)) return false;
      if (!omega_product(f_star, e_star).equal(zero, 0)) return false;
    }
    // Defect-free self-consistency: inserting sum_j s_{f_j} s_{f_j}* does
    // not change the state value (both sides vanish for nonempty u).
    for (const Element& x : {e, e_star}) {
      Scalar inserted;
      for (int j = 1; j <= t.n(); ++j) {
        Element p = Element::generator(theta, Word::red(j), Word::red(j));
        inserted += omega_product(x, p);
      }
      if (!inserted.equal(omega(x), 0)) return false;
      if (!omega(x).equal(zero, 0)) return false;
    }
  }
  return true;
}

bool tensor_split_check(const ThetaPtr& theta, int maxdeg) {
  require_identity(theta);
  if (maxdeg < 0) throw PreconditionError("maxdeg must be >= 0");
  const ThetaSpec& t = *theta;
  std::vector<Word> blue_words{Word{}};
  std::vector<Word> red_words{Word{}};
  for (int len = 1; len <= maxdeg; ++len) {
    for (const Word& w : enumerate_words({len, 0}, t)) blue_words.push_back(w);
    for (const Word& w : enumerate_words({0, len}, t)) red_words.push_back(w);
  }

  for (const Word& u1 : blue_words)
    for (const Word& v1 : red_words)
      for (const Word& u2 : blue_words)
        for (const Word& v2 : red_words) {
          Word left{u1.blues, v1.reds};
          Word right{u2.blues, v2.reds};
          Scalar lhs = omega(Element::generator(theta, left, right));
          Rational rhs;
          if (u1 == u2 && v1 == v2)
            rhs = rational_power(t.m(), -u1.degree().blue) *
                  rational_power(t.n(), -v1.degree().red);
          if (!lhs.equal(Scalar(rhs), 0)) return false;
        }
  return true;
}

std::vector<GenPair> standard_generators_total_degree(const ThetaSpec& theta,
                                                      int d) {
  std::vector<GenPair> out;
  for (int k1 = 0; k1 <= d; ++k1)
    for (int l1 = 0; l1 <= d; ++l1)
      for (int k2 = 0; k1 + k2 <= d; ++k2)
        for (int l2 = 0; l1 + l2 <= d; ++l2)
          for_each_word({k1, l1}, theta, [&](const Word& u) {
            for_each_word({k2, l2}, theta, [&](const Word& v) {
              out.push_back(GenPair{u, v});
            });
          });
  return out;
}

std::vector<GenPair> standard_generators_word_degree(const ThetaSpec& theta,
                                                     int d) {
  std::vector<GenPair> out;
  for (int k1 = 0; k1 <= d; ++k1)
    for (int l1 = 0; l1 <= d; ++l1)
      for (int k2 = 0; k2 <= d; ++k2)
        for (int l2 = 0; l2 <= d; ++l2)
          for_each_word({k1, l1}, theta, [&](const Word& u) {
            for_each_word({k2, l2}, theta, [&](const Word& v) {
              out.push_back(GenPair{u, v});
            });
          });
  return out;
}

namespace {

// Residual for a single ordered generator pair, with the flow factor
// applied directly to the one-term right argument.
Scalar pair_residual(const GenPair& a, const GenPair& b, const ThetaPtr& tp) {
  Element ea = Element::generator(tp, a.u, a.v);
  Element eb = Element::generator(tp, b.u, b.v);
  return kms_check(ea, eb);
}

}  // namespace

SuiteResult kms_suite(const ThetaPtr& theta, const SuiteOptions& options) {
  if (!theta) throw PreconditionError("kms_suite requires a theta spec");
  if (options.max_degree < 0)
    throw PreconditionError("suite degree bound must be >= 0");
  std::vector<GenPair> gens =
      standard_generators_total_degree(*theta, options.max_degree);

  unsigned threads = options.threads;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, 32);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    SuiteResult local;
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Scalar r = pair_residual(gens[i], gens[j], theta);
        ++local.checked;
        if (!r.is_zero() && local.failures.size() < 64)
          local.failures.push_back({gens[i], gens[j], r});
      }
    return local;
  };

  if (threads <= 1 || gens.size() < 2 * threads) {
    return run_range(0, gens.size());
  }

  std::vector<std::future<SuiteResult>> futures;
  std::size_t chunk = (gens.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = std::min<std::size_t>(t * chunk, gens.size());
    std::size_t end = std::min<std::size_t>(begin + chunk, gens.size());
    if (begin < end)
      futures.push_back(
          std::async(std::launch::async, run_range, begin, end));
  }
  SuiteResult merged;
  for (auto& f : futures) {
    SuiteResult part = f.get();
    merged.checked += part.checked;
    for (auto& fail : part.failures)
      if (merged.failures.size() < 64) merged.failures.push_back(fail);
  }
  return merged;
}

void kms_suite_stream(
    const ThetaPtr& theta, int max_degree,
    const std::function<void(const GenPair&, const GenPair&, const Scalar&)>&
        fn) {
  if (!theta) throw PreconditionError("kms_suite_stream requires a theta spec");
  std::vector<GenPair> gens =
      standard_generators_total_degree(*theta, max_degree);
  for (const GenPair& a : gens)
    for (const GenPair& b : gens) fn(a, b, pair_residual(a, b, theta));
}

}  // namespace twograph
