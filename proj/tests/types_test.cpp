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


#include <gtest/gtest.h>

#include "test_support.hpp"

namespace indecision {
namespace {

TEST(Types, KindNamesRoundTrip) {
  for (ModelKind kind : kAllKinds) EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
  EXPECT_THROW(kind_from_name("max-lambda"), ValidationError);
}

TEST(Types, VariantAndModeNamesRoundTrip) {
  for (auto v : {MaxUVariant::kMainText, MaxUVariant::kSumForm}) {
    EXPECT_EQ(maxu_variant_from_name(maxu_variant_name(v)), v);
  }
  for (auto v : {StrictVariant::kClosedForm, StrictVariant::kProcess}) {
    EXPECT_EQ(strict_variant_from_name(strict_variant_name(v)), v);
  }
  for (auto m : {DatasetMode::kIndecisive, DatasetMode::kStrict}) {
    EXPECT_EQ(mode_from_name(mode_name(m)), m);
  }
}

TEST(Types, ResponseCodes) {
  EXPECT_EQ(response_code(Response::kIndecision), 0);
  EXPECT_EQ(response_code(Response::kPreferFirst), 1);
  EXPECT_EQ(response_code(Response::kPreferSecond), 2);
  EXPECT_EQ(response_from_code(2), Response::kPreferSecond);
  EXPECT_THROW(response_from_code(3), ValidationError);
}

TEST(Types, KindClassification) {
  EXPECT_TRUE(is_indecision_kind(ModelKind::kDom));
  EXPECT_FALSE(is_indecision_kind(ModelKind::kLogit));
  EXPECT_TRUE(has_scores(ModelKind::kLogit));
  EXPECT_FALSE(has_scores(ModelKind::kNaiveRand));
  EXPECT_TRUE(is_difference_kind(ModelKind::kMaxDelta));
  EXPECT_FALSE(is_difference_kind(ModelKind::kMinU));
}

TEST(Types, ModelValidation) {
  using testing::model;
  EXPECT_NO_THROW(check_model(model(ModelKind::kMinDelta, {1, 2, 3}, 0.5)));
  EXPECT_THROW(check_model(model(ModelKind::kMinDelta, {1, 2, 3}, -0.1)), ValidationError);
  EXPECT_THROW(check_model(model(ModelKind::kMaxDelta, {1, 2, 3}, -1.0)), ValidationError);
  EXPECT_NO_THROW(check_model(model(ModelKind::kMinU, {1, 2, 3}, -1.0)));
  IndecisionModel naive = model(ModelKind::kNaiveRand, {});
  naive.rand_q = 1.5;
  EXPECT_THROW(check_model(naive), ValidationError);
}

TEST(Types, PolicyValidation) {
  EXPECT_NO_THROW(check_policy({0.0, StrictVariant::kClosedForm}));
  EXPECT_NO_THROW(check_policy({1.0, StrictVariant::kProcess}));
  EXPECT_THROW(check_policy({-0.1, StrictVariant::kClosedForm}), ValidationError);
  EXPECT_THROW(check_policy({std::nan(""), StrictVariant::kClosedForm}), ValidationError);
}

TEST(Types, StrictDatasetRejectsIndecision) {
  auto data = testing::dataset(DatasetMode::kStrict,
                               {{testing::query({0.1}, {0.2}), Response::kIndecision}});
  EXPECT_THROW(check_dataset(data), ValidationError);
  data.mode = DatasetMode::kIndecisive;
  EXPECT_NO_THROW(check_dataset(data));
}

TEST(Types, QueryDimensionsMustMatch) {
  EXPECT_THROW(check_query(testing::query({0.1, 0.2}, {0.3})), ValidationError);
}

TEST(Types, MixtureValidation) {
  MixtureModel mix;
  EXPECT_THROW(check_mixture(mix), ValidationError);
  mix.submodels = {testing::model(ModelKind::kMinDelta)};
  mix.weights = {0.0, 1.0};
  EXPECT_THROW(check_mixture(mix), ValidationError);
  mix.weights = {0.0};
  EXPECT_NO_THROW(check_mixture(mix));
}

}  // namespace
}  // namespace indecision
