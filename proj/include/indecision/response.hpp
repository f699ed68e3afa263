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

#ifndef INDECISION_RESPONSE_HPP_
#define INDECISION_RESPONSE_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "indecision/distribution.hpp"
#include "indecision/random.hpp"
#include "indecision/scores.hpp"
#include "indecision/types.hpp"

namespace indecision {

// Subset of {0, 1, 2}, stored as a bit mask.
class ResponseSet {
 public:
  constexpr ResponseSet() = default;
  constexpr ResponseSet(std::initializer_list<Response> responses) {
    for (Response r : responses) insert(r);
  }

  constexpr void insert(Response r) { bits_ |= bit(r); }
  constexpr bool contains(Response r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
  }
  constexpr std::uint8_t mask() const { return bits_; }

  std::vector<Response> members() const {
    std::vector<Response> out;
    for (Response r : kAllResponses) {
      if (contains(r)) out.push_back(r);
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (Response r : members()) {
      if (out.size() > 1) out += ",";
      out += std::to_string(response_code(r));
    }
    return out + "}";
  }

  friend constexpr bool operator==(ResponseSet, ResponseSet) = default;

 private:
  static constexpr std::uint8_t bit(Response r) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

// Responses whose score is within `tol` of the maximum.
inline ResponseSet feasible_from_scores(const ScoreTriple& s, double tol) {
  const double cutoff = std::max({s.s0, s.s1, s.s2}) - tol;
  ResponseSet out;
  for (Response r : kAllResponses) {
    if (s[r] >= cutoff) out.insert(r);
  }
  return out;
}

inline ResponseSet feasible_responses(const IndecisionModel& model,
                                      const ComparisonQuery& query,
                                      double tol = 0.0) {
  if (!(tol >= 0.0)) throw ValidationError("tolerance must be nonnegative");
  const ScoreTriple s = scores(model, query);
  detail::check_finite(s);
  return feasible_from_scores(s, tol);
}

// Noise-free agent: a uniformly random member of the exact argmax set.
inline Response deterministic_response(const IndecisionModel& model,
                                       const ComparisonQuery& query,
                                       Rng& rng) {
  const std::vector<Response> options =
      feasible_responses(model, query, 0.0).members();
  return options[uniform_index(rng, options.size())];
}

inline Response draw_from(const ResponseDistribution& dist, Rng& rng) {
  const double u = uniform01(rng);
  if (u < dist.p0) return Response::kIndecision;
  if (u < dist.p0 + dist.p1) return Response::kPreferFirst;
  return Response::kPreferSecond;
}

inline Response draw_from(const StrictDistribution& dist, Rng& rng) {
  return uniform01(rng) < dist.p1 ? Response::kPreferFirst
                                  : Response::kPreferSecond;
}

inline Response sample_response(const IndecisionModel& model,
                                const ComparisonQuery& query, Rng& rng) {
  return draw_from(response_distribution(model, query), rng);
}

// Forced-choice draw. Baselines without scores answer uniformly.
inline Response sample_strict(const IndecisionModel& model,
                              const StrictPolicy& policy,
                              const ComparisonQuery& query, Rng& rng) {
  if (!has_scores(model.kind)) return draw_from(StrictDistribution{}, rng);
  return draw_from(strict_distribution(model, policy, query), rng);
}

}  // namespace indecision

#endif  // INDECISION_RESPONSE_HPP_
