// Copyright 2026 The Indecision Modeling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDECISION_DISTRIBUTION_HPP_
#define INDECISION_DISTRIBUTION_HPP_

#include <algorithm>
#include <cmath>
#include <string>

#include "indecision/scores.hpp"
#include "indecision/types.hpp"

namespace indecision {

// Probabilities of the two strict answers when indecision is disallowed.
struct StrictDistribution {
  double p1 = 0.5;
  double p2 = 0.5;

  double operator[](Response r) const {
    switch (r) {
      case Response::kPreferFirst: return p1;
      case Response::kPreferSecond: return p2;
      case Response::kIndecision: return 0.0;
    }
    return 0.0;
  }
};

// Gumbel(1) noise on each score turns the argmax into a softmax. The two
// strict terms are always added first so that swapping the query swaps p1
// and p2 without changing any rounding.
inline ResponseDistribution softmax(const ScoreTriple& s) {
  const double m = std::max({s.s0, s.s1, s.s2});
  const double e0 = std::exp(s.s0 - m);
  const double e1 = std::exp(s.s1 - m);
  const double e2 = std::exp(s.s2 - m);
  const double total = e0 + (e1 + e2);
  return {e0 / total, e1 / total, e2 / total};
}

inline double log_softmax(const ScoreTriple& s, Response r) {
  const double m = std::max({s.s0, s.s1, s.s2});
  const double total =
      std::exp(s.s0 - m) + (std::exp(s.s1 - m) + std::exp(s.s2 - m));
  return (s[r] - m) - std::log(total);
}

// Two-class logit over the strict scores only.
inline StrictDistribution strict_logit(const ScoreTriple& s) {
  const double m = std::max(s.s1, s.s2);
  const double e1 = std::exp(s.s1 - m);
  const double e2 = std::exp(s.s2 - m);
  return {e1 / (e1 + e2), e2 / (e1 + e2)};
}

// Forced-choice distribution of a score model.
//
// kClosedForm:
//   p1 = q (e^S1 + e^S0 / 2) / C + (1 - q) e^S1 / D
//   with C = e^S0 + e^S1 + e^S2 and D = e^S1 + e^S2.
//   The coin's q branch splits the indecision mass evenly and the 1 - q
//   branch is the strict logit.
// kProcess:
//   p1 = p(1) + p(0) [q e^S1 / D + (1 - q) / 2]
//   Draw from the three-way softmax; on indecision, heads (q) draws from the
//   strict logit and tails picks uniformly.
inline StrictDistribution strict_from_scores(const ScoreTriple& s,
                                             const StrictPolicy& policy) {
  const ResponseDistribution full = softmax(s);
  const StrictDistribution logit = strict_logit(s);
  const double q = policy.q;
  if (policy.variant == StrictVariant::kClosedForm) {
    const double split = 0.5 * full.p0;
    return {q * (full.p1 + split) + (1.0 - q) * logit.p1,
            q * (full.p2 + split) + (1.0 - q) * logit.p2};
  }
  const double resample = q * logit.p1 + (1.0 - q) * 0.5;
  const double resample2 = q * logit.p2 + (1.0 - q) * 0.5;
  return {full.p1 + full.p0 * resample, full.p2 + full.p0 * resample2};
}

namespace detail {

inline void check_finite(const ScoreTriple& s) {
  if (!std::isfinite(s.s0) || !std::isfinite(s.s1) || !std::isfinite(s.s2)) {
    throw ValidationError("non-finite response scores");
  }
}

}  // namespace detail

// Three-way response distribution. Naive-rand answers indecision with
// probability q and splits the rest; uniform-rand is (1/3, 1/3, 1/3).
inline ResponseDistribution response_distribution(
    const IndecisionModel& model, const ComparisonQuery& query) {
  check_model(model);
  check_query(query);
  if (model.kind == ModelKind::kUniformRand) {
    return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  }
  if (model.kind == ModelKind::kNaiveRand) {
    const double strict = 0.5 * (1.0 - model.rand_q);
    return {model.rand_q, strict, strict};
  }
  const ScoreTriple s = scores(model, query);
  detail::check_finite(s);
  return softmax(s);
}

// Forced-choice distribution. Logit has no indecision mechanism, so it
// ignores the policy and uses its strict logit.
inline StrictDistribution strict_distribution(const IndecisionModel& model,
                                              const StrictPolicy& policy,
                                              const ComparisonQuery& query) {
  check_policy(policy);
  check_model(model);
  check_query(query);
  // Random baselines pick either item with equal probability.
  if (!has_scores(model.kind)) return {0.5, 0.5};
  const ScoreTriple s = scores(model, query);
  detail::check_finite(s);
  if (model.kind == ModelKind::kLogit) return strict_logit(s);
  return strict_from_scores(s, policy);
}

}  // namespace indecision

#endif  // INDECISION_DISTRIBUTION_HPP_
