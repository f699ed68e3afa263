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


#include <vector>

#include <gtest/gtest.h>

#include "indecision/param_space.hpp"
#include "indecision/sobol.hpp"

namespace indecision {
namespace {

TEST(ParamSpace, MidpointDecodesToCentre) {
  const auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  const auto d = decode_params(std::vector<double>(4, 0.5), space);
  EXPECT_EQ(d.model.weights, (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(d.model.threshold, 1.0);
  EXPECT_FALSE(d.policy);
}

TEST(ParamSpace, OriginDecodesToLowerBounds) {
  const auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  const auto d = decode_params(std::vector<double>(4, 0.0), space);
  EXPECT_EQ(d.model.weights, (std::vector<double>{-1, -1, -1}));
  EXPECT_EQ(d.model.threshold, 0.0);
}

TEST(ParamSpace, LevelKindsUseSignedThreshold) {
  const auto space = ParamSpace::standard(ModelKind::kMinU, 3);
  EXPECT_EQ(decode_params(std::vector<double>(4, 0.0), space).model.threshold, -2.0);
}

TEST(ParamSpace, CategoricalBins) {
  EXPECT_EQ(decode_kind(0.0), ModelKind::kMinDelta);
  EXPECT_EQ(decode_kind(0.2), ModelKind::kMaxDelta);
  EXPECT_EQ(decode_kind(0.59), ModelKind::kMinU);
  EXPECT_EQ(decode_kind(0.6), ModelKind::kMaxU);
  EXPECT_EQ(decode_kind(0.95), ModelKind::kDom);
  EXPECT_EQ(decode_kind(0.999999), ModelKind::kDom);
}

TEST(ParamSpace, SearchDimensions) {
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kDom, 3)), 4u);
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kDom, 3, true)), 5u);
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kLogit, 3, true)), 3u);
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kNaiveRand, 3)), 1u);
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kNaiveRand, 3, true)), 0u);
  EXPECT_EQ(search_dimension(ParamSpace::standard(ModelKind::kUniformRand, 3)), 0u);
}

TEST(ParamSpace, StrictAddsOpenQ) {
  const auto space = ParamSpace::standard(ModelKind::kMaxDelta, 3, true);
  const auto lo = decode_params(std::vector<double>(5, 0.0), space);
  ASSERT_TRUE(lo.policy);
  EXPECT_GT(lo.policy->q, 0.0);
  const auto mid = decode_params(std::vector<double>(5, 0.5), space);
  EXPECT_EQ(mid.policy->q, 0.5);
}

TEST(ParamSpace, DimensionMismatchThrows) {
  const auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  EXPECT_THROW(decode_params(std::vector<double>(3, 0.5), space), ValidationError);
}

TEST(ParamSpace, DecodedModelsRespectBounds) {
  for (ModelKind kind : kIndecisionKinds) {
    const auto space = ParamSpace::standard(kind, 3, true);
    for (const auto& p : sobol_points(search_dimension(space), 500, 7)) {
      const auto d = decode_params(p, space);
      EXPECT_NO_THROW(check_model(d.model));
      for (double w : d.model.weights) {
        EXPECT_GE(w, -1.0);
        EXPECT_LE(w, 1.0);
      }
      const Interval lambda = space.lambda_bounds(kind);
      EXPECT_TRUE(lambda.contains(d.model.threshold));
      EXPECT_GT(d.policy->q, 0.0);
      EXPECT_LT(d.policy->q, 1.0);
    }
  }
}

TEST(ParamSpace, MixtureLayout) {
  auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  EXPECT_EQ(mixture_search_dimension(space, 2, true), 12u);
  EXPECT_EQ(mixture_search_dimension(space, 2, false), 10u);
  std::vector<double> point(12, 0.5);
  point[0] = 0.95;  // first component kind
  point[5] = 0.1;   // second component kind
  point[10] = 1.0;  // first mixture weight at its upper bound
  const MixtureModel mix = decode_mixture(point, space, 2, std::nullopt);
  EXPECT_EQ(mix.submodels[0].kind, ModelKind::kDom);
  EXPECT_EQ(mix.submodels[1].kind, ModelKind::kMinDelta);
  EXPECT_EQ(mix.weights, (std::vector<double>{3.0, 0.0}));
  EXPECT_TRUE(mix.policies.empty());
  space.strict = true;
  EXPECT_EQ(mixture_search_dimension(space, 2, false), 12u);
  const MixtureModel strict = decode_mixture(std::vector<double>(12, 0.5), space, 2,
                                             ModelKind::kMinDelta);
  ASSERT_EQ(strict.policies.size(), 2u);
  EXPECT_EQ(strict.policies[1].q, 0.5);
  EXPECT_THROW(decode_mixture(point, space, 2, ModelKind::kLogit), ValidationError);
}

TEST(ParamSpace, Validation) {
  auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  EXPECT_NO_THROW(check_space(space));
  space.difference_lambda = {-1.0, 2.0};
  EXPECT_THROW(check_space(space), ValidationError);
  space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  space.weight_bounds[1] = {1.0, -1.0};
  EXPECT_THROW(check_space(space), ValidationError);
}

}  // namespace
}  // namespace indecision
