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

// Noise-free response functions written directly in terms of utilities and
// the threshold, and a randomized check that they select the same feasible
// responses as the argmax of the score functions.

#ifndef INDECISION_RESPONSE_FUNCTION_HPP_
#define INDECISION_RESPONSE_FUNCTION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "indecision/random.hpp"
#include "indecision/response.hpp"
#include "indecision/scores.hpp"
#include "indecision/types.hpp"

namespace indecision {

namespace detail {

// a >= b, relaxed by tol.
inline bool at_least(double a, double b, double tol) { return a >= b - tol; }

inline double min_advantage(const IndecisionModel& model, const Item& a,
                            const Item& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < a.dimension(); ++n) {
    best = std::min(best, feature_utility(model, a, n) -
                              feature_utility(model, b, n));
  }
  return best;
}

// "Agent is indecisive when both values are below the threshold": shared by
// Min-U (on utilities) and Dom (on minimum feature advantages).
inline ResponseSet below_threshold_set(double vi, double vj, double lambda,
                                       double tol) {
  ResponseSet out;
  if (at_least(vi, std::max(vj, lambda), tol)) out.insert(Response::kPreferFirst);
  if (at_least(vj, std::max(vi, lambda), tol)) out.insert(Response::kPreferSecond);
  if (at_least(lambda, std::max(vi, vj), tol)) out.insert(Response::kIndecision);
  return out;
}

}  // namespace detail

// Feasible set of the utility/threshold response function of an indecision
// model. The Min-delta rule for response 2 is u(j) - u(i) >= lambda.
inline ResponseSet response_function_feasible(const IndecisionModel& model,
                                              const ComparisonQuery& query,
                                              double tol = 0.0) {
  check_query(query);
  const double lambda = model.threshold;
  ResponseSet out;
  switch (model.kind) {
    case ModelKind::kMinDelta: {
      const double d = utility(model, query.first) - utility(model, query.second);
      if (detail::at_least(d, lambda, tol)) out.insert(Response::kPreferFirst);
      if (detail::at_least(-d, lambda, tol)) out.insert(Response::kPreferSecond);
      if (detail::at_least(lambda, std::abs(d), tol)) {
        out.insert(Response::kIndecision);
      }
      return out;
    }
    case ModelKind::kMaxDelta: {
      const double d = utility(model, query.first) - utility(model, query.second);
      if (detail::at_least(d, 0.0, tol) && detail::at_least(lambda, d, tol)) {
        out.insert(Response::kPreferFirst);
      }
      if (detail::at_least(d, -lambda, tol) && detail::at_least(0.0, d, tol)) {
        out.insert(Response::kPreferSecond);
      }
      if (detail::at_least(std::abs(d), lambda, tol)) {
        out.insert(Response::kIndecision);
      }
      return out;
    }
    case ModelKind::kMinU:
      return detail::below_threshold_set(utility(model, query.first),
                                         utility(model, query.second), lambda,
                                         tol);
    case ModelKind::kMaxU: {
      const double ui = utility(model, query.first);
      const double uj = utility(model, query.second);
      if (detail::at_least(std::min(ui, lambda), uj, tol)) {
        out.insert(Response::kPreferFirst);
      }
      if (detail::at_least(std::min(uj, lambda), ui, tol)) {
        out.insert(Response::kPreferSecond);
      }
      if (detail::at_least(std::min(ui, uj), lambda, tol)) {
        out.insert(Response::kIndecision);
      }
      return out;
    }
    case ModelKind::kDom:
      return detail::below_threshold_set(
          detail::min_advantage(model, query.first, query.second),
          detail::min_advantage(model, query.second, query.first), lambda, tol);
    default:
      break;
  }
  throw ValidationError(std::string(kind_name(model.kind)) +
                        " has no threshold response function");
}

struct EquivalenceMismatch {
  IndecisionModel model;
  ComparisonQuery query;
  ResponseSet score_set;
  ResponseSet function_set;
};

struct KindEquivalence {
  ModelKind kind = ModelKind::kMinDelta;
  MaxUVariant maxu_variant = MaxUVariant::kSumForm;
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  std::size_t tie_trials = 0;
  std::vector<EquivalenceMismatch> examples;  // at most a few
};

struct EquivalenceReport {
  std::vector<KindEquivalence> kinds;
  // Max-U with the 2*min score disagrees with the response function at
  // u(i) = 1, u(j) = 0.9, lambda = 0.85 ({1} vs {0}).
  bool main_text_counterexample_reproduced = false;
  ResponseSet counterexample_main_text;
  ResponseSet counterexample_sum_form;
  ResponseSet counterexample_function;

  std::size_t total_mismatches() const {
    std::size_t n = 0;
    for (const auto& k : kinds) n += k.mismatches;
    return n;
  }
  bool passed() const {
    return total_mismatches() == 0 && main_text_counterexample_reproduced;
  }
};

namespace detail {

inline Item random_unit_item(Rng& rng, std::size_t dim) {
  Item item;
  item.features.resize(dim);
  for (double& x : item.features) x = uniform01(rng);
  return item;
}

inline ComparisonQuery max_u_counterexample_query() {
  return {Item{{1.0}, std::nullopt}, Item{{0.9}, std::nullopt}, std::nullopt};
}

}  // namespace detail

// Draws `trials` random (weights, threshold, query) triples per kind and
// compares the score argmax set with the response-function set. One draw
// in eight compares an item with itself and one in eight places the
// threshold exactly on a decision boundary, so exact ties are exercised.
inline EquivalenceReport run_equivalence_check(std::size_t trials,
                                               std::uint64_t seed,
                                               double tol = 1e-9,
                                               std::size_t dim = 3) {
  EquivalenceReport report;
  for (ModelKind kind : kIndecisionKinds) {
    KindEquivalence result;
    result.kind = kind;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(kind)));
    for (std::size_t t = 0; t < trials; ++t) {
      IndecisionModel model;
      model.kind = kind;
      model.maxu_variant = MaxUVariant::kSumForm;
      model.weights.resize(dim);
      for (double& w : model.weights) w = uniform_in(rng, -1.0, 1.0);
      if (is_difference_kind(kind)) {
        // (0, 2]
        model.threshold = 2.0 - uniform_in(rng, 0.0, 2.0);
      } else {
        model.threshold = uniform_in(rng, -2.0, 2.0);
      }
      ComparisonQuery query{detail::random_unit_item(rng, dim),
                            detail::random_unit_item(rng, dim), t};
      const std::uint64_t tie_case = uniform_index(rng, 8);
      if (tie_case == 0) {
        query.second = query.first;
        ++result.tie_trials;
      } else if (tie_case == 1) {
        const double ui = utility(model, query.first);
        const double uj = utility(model, query.second);
        const bool pick_first = uniform_index(rng, 2) == 0;
        switch (kind) {
          case ModelKind::kMinDelta:
          case ModelKind::kMaxDelta:
            model.threshold = std::abs(ui - uj);
            break;
          case ModelKind::kMinU:
          case ModelKind::kMaxU:
            model.threshold = pick_first ? ui : uj;
            break;
          default:
            model.threshold =
                pick_first ? detail::min_advantage(model, query.first, query.second)
                           : detail::min_advantage(model, query.second, query.first);
            break;
        }
        ++result.tie_trials;
      }
      ++result.trials;
      const ResponseSet by_score = feasible_responses(model, query, tol);
      const ResponseSet by_function = response_function_feasible(model, query, tol);
      if (by_score != by_function) {
        ++result.mismatches;
        if (result.examples.size() < 5) {
          result.examples.push_back({model, query, by_score, by_function});
        }
      }
    }
    report.kinds.push_back(std::move(result));
  }

  IndecisionModel maxu{ModelKind::kMaxU, {1.0}, 0.85, 0.0, MaxUVariant::kMainText};
  const ComparisonQuery query = detail::max_u_counterexample_query();
  report.counterexample_main_text = feasible_responses(maxu, query, tol);
  report.counterexample_function = response_function_feasible(maxu, query, tol);
  maxu.maxu_variant = MaxUVariant::kSumForm;
  report.counterexample_sum_form = feasible_responses(maxu, query, tol);
  report.main_text_counterexample_reproduced =
      report.counterexample_main_text == ResponseSet{Response::kPreferFirst} &&
      report.counterexample_function == ResponseSet{Response::kIndecision} &&
      report.counterexample_sum_form == report.counterexample_function;
  return report;
}

}  // namespace indecision

#endif  // INDECISION_RESPONSE_FUNCTION_HPP_
