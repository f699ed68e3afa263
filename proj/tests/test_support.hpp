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


#ifndef INDECISION_TESTS_TEST_SUPPORT_HPP_
#define INDECISION_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "indecision/indecision.hpp"

namespace indecision::testing {

inline Item item(std::vector<double> features) { return Item{std::move(features), {}}; }

inline ComparisonQuery query(std::vector<double> a, std::vector<double> b) {
  return {item(std::move(a)), item(std::move(b)), {}};
}

inline IndecisionModel model(ModelKind kind, std::vector<double> weights = {0, 0, 0},
                             double lambda = 0.0) {
  IndecisionModel m;
  m.kind = kind;
  m.weights = std::move(weights);
  m.threshold = lambda;
  return m;
}

// One-dimensional query whose utilities under weight 1 are exactly (ui, uj).
inline ComparisonQuery utilities(double ui, double uj) { return query({ui}, {uj}); }

// Three-sigma binomial band for `count` successes out of `n` at rate `p`.
inline bool within_3_sigma(std::size_t count, std::size_t n, double p) {
  const double mean = p * static_cast<double>(n);
  const double sd = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
  return std::abs(static_cast<double>(count) - mean) <= 3.0 * sd;
}

inline ResponseDataset dataset(DatasetMode mode,
                               const std::vector<std::pair<ComparisonQuery, Response>>& rows,
                               const std::string& voter = "v") {
  ResponseDataset data;
  data.mode = mode;
  for (const auto& [q, r] : rows) data.records.push_back({voter, q, r});
  return data;
}

}  // namespace indecision::testing

#endif  // INDECISION_TESTS_TEST_SUPPORT_HPP_
