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


#include <array>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace indecision {
namespace {

using testing::model;

TEST(FeasibleResponses, AllTie) {
  const auto set = feasible_responses(model(ModelKind::kMinDelta, {1}, 0.0),
                                      testing::utilities(0.3, 0.3));
  EXPECT_EQ(set, (ResponseSet{Response::kIndecision, Response::kPreferFirst,
                              Response::kPreferSecond}));
}

TEST(FeasibleResponses, DifferenceEqualToThreshold) {
  const auto set = feasible_responses(model(ModelKind::kMinDelta, {1}, 0.25),
                                      testing::utilities(0.75, 0.5));
  EXPECT_EQ(set, (ResponseSet{Response::kIndecision, Response::kPreferFirst}));
}

TEST(FeasibleResponses, MaxUVariantsDiverge) {
  auto m = model(ModelKind::kMaxU, {1}, 0.85);
  const auto q = testing::utilities(1.0, 0.9);
  EXPECT_EQ(feasible_responses(m, q), ResponseSet{Response::kPreferFirst});
  m.maxu_variant = MaxUVariant::kSumForm;
  EXPECT_EQ(feasible_responses(m, q), ResponseSet{Response::kIndecision});
}

TEST(FeasibleResponses, ToleranceWidensSet) {
  const ScoreTriple s{1.0, 1.0 - 1e-10, 0.0};
  EXPECT_EQ(feasible_from_scores(s, 0.0), ResponseSet{Response::kIndecision});
  EXPECT_EQ(feasible_from_scores(s, 1e-9),
            (ResponseSet{Response::kIndecision, Response::kPreferFirst}));
}

TEST(ResponseFunction, MatchesScoresOnEquivalentKinds) {
  const EquivalenceReport report = run_equivalence_check(2000, 3);
  EXPECT_EQ(report.total_mismatches(), 0u);
  EXPECT_TRUE(report.main_text_counterexample_reproduced);
  EXPECT_EQ(report.counterexample_main_text, ResponseSet{Response::kPreferFirst});
  EXPECT_EQ(report.counterexample_function, ResponseSet{Response::kIndecision});
  for (const auto& k : report.kinds) EXPECT_GT(k.tie_trials, 0u) << kind_name(k.kind);
}

TEST(DeterministicResponse, UniqueArgmax) {
  Rng rng(1);
  const auto m = model(ModelKind::kMinU, {1}, 0.0);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(deterministic_response(m, testing::utilities(2, 1), rng), Response::kPreferFirst);
  }
}

TEST(DeterministicResponse, TiesAreUniform) {
  Rng rng(2);
  const auto m = model(ModelKind::kMinDelta, {1}, 0.0);
  const auto q = testing::utilities(0.5, 0.5);
  std::array<std::size_t, 3> counts{};
  const std::size_t n = 30000;
  for (std::size_t t = 0; t < n; ++t) {
    ++counts[static_cast<std::size_t>(deterministic_response(m, q, rng))];
  }
  for (std::size_t c : counts) EXPECT_TRUE(testing::within_3_sigma(c, n, 1.0 / 3)) << c;
}

TEST(DeterministicResponse, SeedReproducible) {
  const auto m = model(ModelKind::kMinDelta, {1}, 0.0);
  const auto q = testing::utilities(0.5, 0.5);
  Rng a(9), b(9);
  for (int t = 0; t < 200; ++t) {
    EXPECT_EQ(deterministic_response(m, q, a), deterministic_response(m, q, b));
  }
}

TEST(SampleResponse, NaiveRandQOneAlwaysIndecisive) {
  auto m = model(ModelKind::kNaiveRand, {});
  m.rand_q = 1.0;
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    EXPECT_EQ(sample_response(m, testing::utilities(0, 1), rng), Response::kIndecision);
  }
}

TEST(SampleResponse, UniformRandFrequencies) {
  Rng rng(5);
  std::array<std::size_t, 3> counts{};
  const std::size_t n = 30000;
  for (std::size_t t = 0; t < n; ++t) {
    ++counts[static_cast<std::size_t>(
        sample_response(model(ModelKind::kUniformRand, {}), testing::utilities(0, 1), rng))];
  }
  for (std::size_t c : counts) EXPECT_TRUE(testing::within_3_sigma(c, n, 1.0 / 3)) << c;
}

TEST(SampleResponse, MatchesDistribution) {
  Rng rng(6);
  const auto m = model(ModelKind::kMaxDelta, {1}, 0.3);
  const auto q = testing::utilities(0.9, 0.2);
  const auto d = response_distribution(m, q);
  std::array<std::size_t, 3> counts{};
  const std::size_t n = 20000;
  for (std::size_t t = 0; t < n; ++t) {
    ++counts[static_cast<std::size_t>(sample_response(m, q, rng))];
  }
  EXPECT_TRUE(testing::within_3_sigma(counts[0], n, d.p0));
  EXPECT_TRUE(testing::within_3_sigma(counts[1], n, d.p1));
  EXPECT_TRUE(testing::within_3_sigma(counts[2], n, d.p2));
}

TEST(SampleStrict, NeverIndecisiveAndMatchesDistribution) {
  Rng rng(7);
  const auto m = model(ModelKind::kMinDelta, {1}, 0.4);
  const StrictPolicy policy{0.3, StrictVariant::kProcess};
  const auto q = testing::utilities(0.6, 0.2);
  const auto d = strict_distribution(m, policy, q);
  std::size_t first = 0;
  const std::size_t n = 20000;
  for (std::size_t t = 0; t < n; ++t) {
    const Response r = sample_strict(m, policy, q, rng);
    ASSERT_NE(r, Response::kIndecision);
    first += r == Response::kPreferFirst;
  }
  EXPECT_TRUE(testing::within_3_sigma(first, n, d.p1));
}

TEST(SampleResponse, SeedReproducible) {
  const auto m = model(ModelKind::kLogit, {1});
  Rng a(8), b(8);
  for (int t = 0; t < 200; ++t) {
    EXPECT_EQ(sample_response(m, testing::utilities(0.1, 0.2), a),
              sample_response(m, testing::utilities(0.1, 0.2), b));
  }
}

}  // namespace
}  // namespace indecision
