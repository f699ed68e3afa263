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

#ifndef INDECISION_SCORES_HPP_
#define INDECISION_SCORES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>

#include "indecision/types.hpp"

namespace indecision {

// Deterministic scores (S0, S1, S2) of the three responses to a query.
struct ScoreTriple {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;

  double operator[](Response r) const {
    switch (r) {
      case Response::kIndecision: return s0;
      case Response::kPreferFirst: return s1;
      case Response::kPreferSecond: return s2;
    }
    return 0.0;
  }
};

namespace detail {

inline double dot(std::span<const double> w, std::span<const double> x) {
  double acc = 0.0;
  for (std::size_t n = 0; n < w.size(); ++n) acc += w[n] * x[n];
  return acc;
}

// min over n of (w_n * a_n - w_n * b_n).
inline double min_feature_advantage(std::span<const double> w,
                                    std::span<const double> a,
                                    std::span<const double> b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < w.size(); ++n) {
    best = std::min(best, w[n] * a[n] - w[n] * b[n]);
  }
  return best;
}

// Score triple from raw feature spans; no validation. Both strict scores are
// produced by the same expression with the arguments swapped, so
// S2(i, j) == S1(j, i) holds bit for bit.
inline ScoreTriple scores_unchecked(const IndecisionModel& model,
                                    std::span<const double> a,
                                    std::span<const double> b) {
  const std::span<const double> w(model.weights);
  const double lambda = model.threshold;
  switch (model.kind) {
    case ModelKind::kMinDelta: {
      const double ua = dot(w, a), ub = dot(w, b);
      return {lambda, ua - ub, ub - ua};
    }
    case ModelKind::kMaxDelta: {
      const double ua = dot(w, a), ub = dot(w, b);
      return {2.0 * std::abs(ua - ub) - lambda, ua - ub, ub - ua};
    }
    case ModelKind::kMinU: {
      const double ua = dot(w, a), ub = dot(w, b);
      return {lambda, ua, ub};
    }
    case ModelKind::kMaxU: {
      const double ua = dot(w, a), ub = dot(w, b);
      const double s0 = model.maxu_variant == MaxUVariant::kMainText
                            ? 2.0 * std::min(ua, ub) - lambda
                            : (ua + ub) - lambda;
      return {s0, ua, ub};
    }
    case ModelKind::kDom:
      return {lambda, min_feature_advantage(w, a, b),
              min_feature_advantage(w, b, a)};
    case ModelKind::kLogit: {
      const double ua = dot(w, a), ub = dot(w, b);
      return {0.0, ua - ub, ub - ua};
    }
    case ModelKind::kNaiveRand:
    case ModelKind::kUniformRand:
      break;
  }
  return {};
}

inline void check_dimensions(const IndecisionModel& model, std::size_t dim) {
  if (model.weights.size() != dim) {
    throw ValidationError("model has " + std::to_string(model.weights.size()) +
                          " weights but items have " + std::to_string(dim) +
                          " features");
  }
}

}  // namespace detail

// Linear utility u(i) = weights . features.
inline double utility(const IndecisionModel& model, const Item& item) {
  detail::check_dimensions(model, item.dimension());
  return detail::dot(model.weights, item.features);
}

// Utility contributed by feature n alone: weights[n] * features[n].
inline double feature_utility(const IndecisionModel& model, const Item& item,
                              std::size_t n) {
  detail::check_dimensions(model, item.dimension());
  if (n >= item.dimension()) {
    throw ValidationError("feature index " + std::to_string(n) +
                          " out of range");
  }
  return model.weights[n] * item.features[n];
}

inline ScoreTriple scores(const IndecisionModel& model,
                          const ComparisonQuery& query) {
  if (!has_scores(model.kind)) {
    throw ValidationError(std::string(kind_name(model.kind)) +
                          " has no score functions");
  }
  check_query(query);
  detail::check_dimensions(model, query.first.dimension());
  return detail::scores_unchecked(model, query.first.features,
                                  query.second.features);
}

inline double score(const IndecisionModel& model, const ComparisonQuery& query,
                    Response r) {
  return scores(model, query)[r];
}

}  // namespace indecision

#endif  // INDECISION_SCORES_HPP_
