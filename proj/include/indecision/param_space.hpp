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

#ifndef INDECISION_PARAM_SPACE_HPP_
#define INDECISION_PARAM_SPACE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indecision/types.hpp"

namespace indecision {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double at(double t) const { return lo + (hi - lo) * t; }
  bool contains(double x) const { return x >= lo && x <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Search box for the parameters of one model kind. Unit-cube coordinates
// are mapped affinely onto these intervals.
struct ParamSpace {
  ModelKind kind = ModelKind::kMinDelta;
  // Forced-choice data: threshold models gain a q coordinate.
  bool strict = false;
  std::vector<Interval> weight_bounds = std::vector<Interval>(3, {-1.0, 1.0});
  Interval difference_lambda{0.0, 2.0};  // min-delta, max-delta
  Interval level_lambda{-2.0, 2.0};      // min-u, max-u, dom
  // Treated as open: decoded q stays strictly inside.
  Interval q_bounds{0.0, 1.0};
  Interval mixture_weight_bounds{-3.0, 3.0};
  MaxUVariant maxu_variant = MaxUVariant::kMainText;
  StrictVariant strict_variant = StrictVariant::kClosedForm;

  static ParamSpace standard(ModelKind kind, std::size_t n_features,
                             bool strict = false) {
    ParamSpace space;
    space.kind = kind;
    space.strict = strict;
    space.weight_bounds.assign(n_features, {-1.0, 1.0});
    return space;
  }

  std::size_t n_features() const { return weight_bounds.size(); }

  Interval lambda_bounds(ModelKind k) const {
    return is_difference_kind(k) ? difference_lambda : level_lambda;
  }

  double decode_q(double t) const {
    const double eps = 1e-9 * (q_bounds.hi - q_bounds.lo);
    return std::clamp(q_bounds.at(t), q_bounds.lo + eps, q_bounds.hi - eps);
  }
};

inline void check_space(const ParamSpace& space) {
  auto check = [](const Interval& iv, const char* what) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw ValidationError(std::string(what) + " bounds must be finite and ordered");
    }
  };
  if (space.weight_bounds.empty()) {
    throw ValidationError("parameter space needs at least one feature");
  }
  for (const Interval& iv : space.weight_bounds) check(iv, "weight");
  check(space.difference_lambda, "difference threshold");
  check(space.level_lambda, "level threshold");
  check(space.q_bounds, "q");
  check(space.mixture_weight_bounds, "mixture weight");
  if (space.difference_lambda.lo < 0.0) {
    throw ValidationError("difference-model thresholds must be nonnegative");
  }
  if (space.q_bounds.lo < 0.0 || space.q_bounds.hi > 1.0 ||
      !(space.q_bounds.lo < space.q_bounds.hi)) {
    throw ValidationError("q bounds must be a nonempty subinterval of [0, 1]");
  }
}

// Number of unit-cube coordinates searched for a single model.
inline std::size_t search_dimension(const ParamSpace& space) {
  const std::size_t n = space.n_features();
  switch (space.kind) {
    case ModelKind::kLogit: return n;
    case ModelKind::kNaiveRand: return space.strict ? 0 : 1;
    case ModelKind::kUniformRand: return 0;
    default: return n + 1 + (space.strict ? 1 : 0);
  }
}

struct DecodedModel {
  IndecisionModel model;
  std::optional<StrictPolicy> policy;
};

namespace detail {

inline void check_point(std::span<const double> point, std::size_t expected) {
  if (point.size() != expected) {
    throw ValidationError("point has dimension " + std::to_string(point.size()) +
                          ", expected " + std::to_string(expected));
  }
}

// Reads weights and threshold for `kind` from point[pos...]; advances pos.
inline IndecisionModel decode_submodel(std::span<const double> point,
                                       std::size_t& pos, ModelKind kind,
                                       const ParamSpace& space) {
  IndecisionModel model;
  model.kind = kind;
  model.maxu_variant = space.maxu_variant;
  model.weights.resize(space.n_features());
  for (std::size_t n = 0; n < space.n_features(); ++n) {
    model.weights[n] = space.weight_bounds[n].at(point[pos++]);
  }
  if (is_indecision_kind(kind)) {
    model.threshold = space.lambda_bounds(kind).at(point[pos++]);
  }
  return model;
}

}  // namespace detail

// Maps a point of [0, 1)^d onto the model's parameters.
inline DecodedModel decode_params(std::span<const double> point,
                                  const ParamSpace& space) {
  detail::check_point(point, search_dimension(space));
  DecodedModel out;
  out.model.kind = space.kind;
  out.model.maxu_variant = space.maxu_variant;
  std::size_t pos = 0;
  switch (space.kind) {
    case ModelKind::kUniformRand:
      return out;
    case ModelKind::kNaiveRand:
      if (!space.strict) out.model.rand_q = space.decode_q(point[0]);
      return out;
    default:
      out.model = detail::decode_submodel(point, pos, space.kind, space);
      if (space.strict && is_indecision_kind(space.kind)) {
        out.policy = StrictPolicy{space.decode_q(point[pos]), space.strict_variant};
      }
      return out;
  }
}

// Categorical coordinate t in [0, 1) -> one of the five threshold kinds by
// equal-width bins.
inline ModelKind decode_kind(double t) {
  const auto bin = static_cast<std::size_t>(
      std::clamp(std::floor(5.0 * t), 0.0, 4.0));
  return kIndecisionKinds[bin];
}

// Mixture layout: per component [kind (if free)] [weights] [threshold], then
// k mixture weights, then k strict q values on forced-choice data.
inline std::size_t mixture_search_dimension(const ParamSpace& space,
                                            std::size_t k, bool free_kind) {
  const std::size_t per = space.n_features() + 1 + (free_kind ? 1 : 0);
  return k * per + k + (space.strict ? k : 0);
}

inline MixtureModel decode_mixture(std::span<const double> point,
                                   const ParamSpace& space, std::size_t k,
                                   std::optional<ModelKind> fixed_kind) {
  if (k == 0) throw ValidationError("mixture needs k >= 1");
  if (fixed_kind && !is_indecision_kind(*fixed_kind)) {
    throw ValidationError("mixture components must be threshold models");
  }
  detail::check_point(point, mixture_search_dimension(space, k, !fixed_kind));
  MixtureModel mix;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const ModelKind kind = fixed_kind ? *fixed_kind : decode_kind(point[pos++]);
    mix.submodels.push_back(detail::decode_submodel(point, pos, kind, space));
  }
  for (std::size_t c = 0; c < k; ++c) {
    mix.weights.push_back(space.mixture_weight_bounds.at(point[pos++]));
  }
  if (space.strict) {
    for (std::size_t c = 0; c < k; ++c) {
      mix.policies.push_back({space.decode_q(point[pos++]), space.strict_variant});
    }
  }
  return mix;
}

}  // namespace indecision

#endif  // INDECISION_PARAM_SPACE_HPP_
