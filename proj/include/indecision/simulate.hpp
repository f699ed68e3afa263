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

#ifndef INDECISION_SIMULATE_HPP_
#define INDECISION_SIMULATE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indecision/param_space.hpp"
#include "indecision/random.hpp"
#include "indecision/response.hpp"
#include "indecision/types.hpp"

namespace indecision {

struct IntRange {
  int lo = 0;
  int hi = 0;

  double normalize(double x) const {
    return hi == lo ? 0.0 : (x - lo) / static_cast<double>(hi - lo);
  }
  bool contains(double x) const { return x >= lo && x <= hi; }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Integer ranges of the patient attributes. They define both how synthetic
// patients are drawn and how raw attributes are min-max normalized to
// [0, 1]. Feature order is (age, drinks, dependents).
struct FeatureSpec {
  IntRange age{25, 70};
  IntRange drinks{1, 5};
  IntRange dependents{0, 2};

  static constexpr std::size_t kDimension = 3;

  Item make_item(const PatientProfile& raw) const {
    return Item{{age.normalize(raw.age), drinks.normalize(raw.drinks),
                 dependents.normalize(raw.dependents)},
                raw};
  }

  friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

inline void check_feature_spec(const FeatureSpec& spec) {
  for (const IntRange& r : {spec.age, spec.drinks, spec.dependents}) {
    if (r.lo > r.hi) throw ValidationError("feature ranges must be nonempty");
  }
}

namespace detail {

inline double draw_int(Rng& rng, const IntRange& r) {
  const auto width = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  return static_cast<double>(r.lo + static_cast<int>(uniform_index(rng, width)));
}

}  // namespace detail

inline std::vector<Item> generate_patients(const FeatureSpec& spec,
                                           std::size_t n, Rng& rng) {
  check_feature_spec(spec);
  if (n == 0) throw ValidationError("patient count must be >= 1");
  std::vector<Item> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PatientProfile raw;
    raw.age = detail::draw_int(rng, spec.age);
    raw.drinks = detail::draw_int(rng, spec.drinks);
    raw.dependents = detail::draw_int(rng, spec.dependents);
    out.push_back(spec.make_item(raw));
  }
  return out;
}

inline constexpr std::size_t kDefaultQueryCount = 40;

inline std::vector<ComparisonQuery> generate_queries(
    const FeatureSpec& spec, Rng& rng, std::size_t n = kDefaultQueryCount) {
  if (n == 0) throw ValidationError("query count must be >= 1");
  std::vector<Item> patients = generate_patients(spec, 2 * n, rng);
  std::vector<ComparisonQuery> out;
  out.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    out.push_back({std::move(patients[2 * q]), std::move(patients[2 * q + 1]), q});
  }
  return out;
}

// One response per query. Strict mode draws from the forced-choice
// distribution of `policy`.
inline ResponseDataset simulate_agent(const IndecisionModel& agent,
                                      const std::optional<StrictPolicy>& policy,
                                      const std::vector<ComparisonQuery>& queries,
                                      DatasetMode mode, Rng& rng,
                                      const std::string& voter_id = "agent") {
  if (mode == DatasetMode::kStrict && !policy && is_indecision_kind(agent.kind)) {
    throw ValidationError("strict simulation requires a strict policy");
  }
  ResponseDataset out;
  out.mode = mode;
  out.records.reserve(queries.size());
  for (const ComparisonQuery& query : queries) {
    const Response r = mode == DatasetMode::kStrict
                           ? sample_strict(agent, policy.value_or(StrictPolicy{}),
                                           query, rng)
                           : sample_response(agent, query, rng);
    out.records.push_back({voter_id, query, r});
  }
  return out;
}

struct PopulationSpec {
  std::size_t count = 0;
  std::vector<std::pair<ModelKind, double>> kind_distribution = {
      {ModelKind::kMinDelta, 1.0}};
  // Bounds for weights and thresholds; kind and strict are ignored.
  ParamSpace bounds;
  // Range of strict-policy q and of naive-rand q.
  Interval q_bounds{0.0, 1.0};
  StrictVariant strict_variant = StrictVariant::kClosedForm;
  MaxUVariant maxu_variant = MaxUVariant::kMainText;
};

struct Agent {
  std::string voter_id;
  IndecisionModel model;
  StrictPolicy policy;
};

inline std::string voter_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "v%04zu", index);
  return buf;
}

inline void check_population(const PopulationSpec& spec) {
  double total = 0.0;
  if (spec.kind_distribution.empty()) {
    throw ValidationError("kind distribution is empty");
  }
  for (const auto& [kind, p] : spec.kind_distribution) {
    if (!(p >= 0.0)) throw ValidationError("kind probabilities must be >= 0");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("kind probabilities must sum to 1");
  }
  check_space(spec.bounds);
}

// Agent v draws everything from its own stream derived from one base value,
// so an agent does not depend on how many agents precede it.
inline std::vector<Agent> generate_population(const PopulationSpec& spec,
                                              Rng& rng) {
  check_population(spec);
  const std::uint64_t base = rng();
  std::vector<Agent> out;
  out.reserve(spec.count);
  for (std::size_t v = 0; v < spec.count; ++v) {
    Rng agent_rng(derive_seed(base, v));
    const double u = uniform01(agent_rng);
    ModelKind kind = spec.kind_distribution.back().first;
    double cumulative = 0.0;
    for (const auto& [k, p] : spec.kind_distribution) {
      cumulative += p;
      if (u < cumulative) {
        kind = k;
        break;
      }
    }
    Agent agent;
    agent.voter_id = voter_name(v);
    agent.model.kind = kind;
    agent.model.maxu_variant = spec.maxu_variant;
    agent.model.weights.resize(spec.bounds.n_features());
    for (std::size_t n = 0; n < agent.model.weights.size(); ++n) {
      agent.model.weights[n] =
          uniform_in(agent_rng, spec.bounds.weight_bounds[n].lo,
                     spec.bounds.weight_bounds[n].hi);
    }
    if (is_indecision_kind(kind)) {
      const Interval lambda = spec.bounds.lambda_bounds(kind);
      agent.model.threshold = uniform_in(agent_rng, lambda.lo, lambda.hi);
    }
    const double q = uniform_in(agent_rng, spec.q_bounds.lo, spec.q_bounds.hi);
    if (kind == ModelKind::kNaiveRand) agent.model.rand_q = q;
    agent.policy = {q, spec.strict_variant};
    out.push_back(std::move(agent));
  }
  return out;
}

// Each voter answers their own random query sequence; voter v uses a
// stream derived from (seed, v).
inline ResponseDataset simulate_population(const std::vector<Agent>& agents,
                                           const FeatureSpec& features,
                                           std::size_t queries_per_voter,
                                           DatasetMode mode,
                                           std::uint64_t seed) {
  ResponseDataset out;
  out.mode = mode;
  for (std::size_t v = 0; v < agents.size(); ++v) {
    Rng rng(derive_seed(seed, v));
    const auto queries = generate_queries(features, rng, queries_per_voter);
    ResponseDataset one = simulate_agent(agents[v].model, agents[v].policy,
                                         queries, mode, rng, agents[v].voter_id);
    for (auto& rec : one.records) out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace indecision

#endif  // INDECISION_SIMULATE_HPP_
