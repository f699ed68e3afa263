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


#include <cmath>
#include <limits>
#include <map>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace indecision {
namespace {

ResponseDataset simulated(const IndecisionModel& agent, std::size_t n, std::uint64_t seed,
                          DatasetMode mode = DatasetMode::kIndecisive,
                          StrictPolicy policy = {0.5, StrictVariant::kClosedForm}) {
  Rng rng(seed);
  const auto queries = generate_queries(FeatureSpec{}, rng, n);
  return simulate_agent(agent, policy, queries, mode, rng);
}

const IndecisionModel kAgent = testing::model(ModelKind::kMinDelta, {-1.0, -0.6, 0.8}, 0.4);

TEST(FitModel, BudgetOneReturnsFirstCandidate) {
  const auto data = simulated(kAgent, 40, 1);
  FitOptions options;
  options.budget = 1;
  const FitResult fit = fit_model(data, ModelKind::kMinDelta, options);
  EXPECT_EQ(fit.candidate_index, 0u);
  const auto space = ParamSpace::standard(ModelKind::kMinDelta, 3);
  EXPECT_EQ(fit.single().weights, decode_params(sobol_points(4, 1, 0)[0], space).model.weights);
}

TEST(FitModel, DeterministicAndThreadIndependent) {
  const auto data = simulated(kAgent, 60, 2);
  FitOptions options;
  options.budget = 777;
  options.seed = 5;
  options.threads = 1;
  const FitResult a = fit_model(data, ModelKind::kMaxU, options);
  options.threads = 3;
  const FitResult b = fit_model(data, ModelKind::kMaxU, options);
  EXPECT_EQ(a.candidate_index, b.candidate_index);
  EXPECT_EQ(a.train_ll, b.train_ll);
  EXPECT_EQ(a.single().weights, b.single().weights);
  EXPECT_EQ(a.single().threshold, b.single().threshold);
}

TEST(FitModel, TrainLLIsSelfConsistent) {
  for (ModelKind kind : kAllKinds) {
    for (DatasetMode mode : {DatasetMode::kIndecisive, DatasetMode::kStrict}) {
      const auto data = simulated(kAgent, 40, 3, mode);
      FitOptions options;
      options.budget = 200;
      const FitResult fit = fit_model(data, kind, options);
      const double recomputed = fit.is_mixture()
                                    ? 0.0
                                    : log_likelihood(fit.single(), data, fit.policy).value;
      EXPECT_NEAR(fit.train_ll, recomputed, 1e-12) << kind_name(kind);
      EXPECT_LT(fit.candidate_index, options.budget);
      EXPECT_EQ(fit.policy.has_value(),
                mode == DatasetMode::kStrict && is_indecision_kind(kind));
    }
  }
}

TEST(FitModel, TrainLLIsMaximumOverCandidates) {
  const auto data = simulated(kAgent, 40, 4);
  FitOptions options;
  options.budget = 300;
  options.seed = 8;
  const FitResult fit = fit_model(data, ModelKind::kDom, options);
  const auto space = ParamSpace::standard(ModelKind::kDom, 3);
  const auto points = sobol_points(search_dimension(space), options.budget, options.seed);
  for (std::size_t c = 0; c < points.size(); ++c) {
    const auto d = decode_params(points[c], space);
    const double ll = log_likelihood(d.model, data).value;
    EXPECT_LE(ll, fit.train_ll);
    if (c < fit.candidate_index) EXPECT_LT(ll, fit.train_ll);
  }
}

TEST(FitModel, NestedBudgetsNeverDecrease) {
  const auto data = simulated(kAgent, 40, 5);
  double previous = -std::numeric_limits<double>::infinity();
  for (std::size_t budget : {1u, 10u, 100u, 1000u}) {
    FitOptions options;
    options.budget = budget;
    options.seed = 2;
    const double ll = fit_model(data, ModelKind::kMinU, options).train_ll;
    EXPECT_GE(ll, previous);
    previous = ll;
  }
}

TEST(FitModel, RecoversKnownAgent) {
  const auto train = simulated(kAgent, 500, 6);
  const auto test = simulated(kAgent, 500, 7);
  FitOptions options;
  options.budget = 5000;
  const FitResult fit = fit_model(train, ModelKind::kMinDelta, options);
  const double fitted = evaluate_fit(fit, test).value;
  const double truth = log_likelihood(kAgent, test).value;
  EXPECT_NEAR(fitted, truth, 0.1);
}

TEST(FitModel, StrictRecoveryFindsQ) {
  const StrictPolicy policy{0.5, StrictVariant::kClosedForm};
  const auto train = simulated(kAgent, 500, 8, DatasetMode::kStrict, policy);
  const auto test = simulated(kAgent, 500, 9, DatasetMode::kStrict, policy);
  FitOptions options;
  options.budget = 5000;
  const FitResult fit = fit_model(train, ModelKind::kMinDelta, options);
  ASSERT_TRUE(fit.policy);
  EXPECT_NEAR(evaluate_fit(fit, test).value, log_likelihood(kAgent, test, policy).value, 0.1);
}

TEST(FitModel, Errors) {
  FitOptions options;
  EXPECT_THROW(fit_model(ResponseDataset{}, ModelKind::kMinDelta, options), ValidationError);
  options.budget = 0;
  EXPECT_THROW(fit_model(simulated(kAgent, 5, 1), ModelKind::kMinDelta, options),
               ValidationError);
}

TEST(SobolSearch, AllCandidatesFlaggedIsReported) {
  const auto never = [](std::span<const double>) {
    return LogLikelihood{-std::numeric_limits<double>::infinity(), 0u};
  };
  EXPECT_FALSE(detail::sobol_search(2, 50, 0, 2, never).found);
}

TEST(SobolSearch, TiesKeepLowestIndex) {
  const auto flat = [](std::span<const double>) { return LogLikelihood{-1.0, {}}; };
  for (std::size_t threads : {1u, 4u}) {
    const auto best = detail::sobol_search(3, 100, 0, threads, flat);
    EXPECT_TRUE(best.found);
    EXPECT_EQ(best.index, 0u);
  }
}

TEST(FitKMixture, SingleFixedComponentTracksSingleModel) {
  const auto data = simulated(kAgent, 80, 10);
  double mixture = 0.0;
  double single = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    FitOptions options;
    options.budget = 2000;
    options.seed = seed;
    mixture += fit_k_mixture(data, 1, options, ModelKind::kMinDelta).train_ll;
    single += fit_model(data, ModelKind::kMinDelta, options).train_ll;
  }
  EXPECT_NEAR(mixture / 5, single / 5, 0.02);
}

TEST(FitKMixture, SelfConsistentAndDeterministic) {
  const auto data = simulated(kAgent, 60, 11, DatasetMode::kStrict);
  FitOptions options;
  options.budget = 500;
  options.seed = 3;
  const FitResult a = fit_k_mixture(data, 2, options);
  const FitResult b = fit_k_mixture(data, 2, options);
  EXPECT_EQ(a.train_ll, b.train_ll);
  EXPECT_EQ(a.candidate_index, b.candidate_index);
  EXPECT_NEAR(a.train_ll, mixture_log_likelihood(a.mixture(), data).value, 1e-12);
  EXPECT_EQ(a.mixture().policies.size(), 2u);
  EXPECT_THROW(fit_k_mixture(data, 0, options), ValidationError);
}

TEST(FitVMixture, OneVoterMatchesBestSubmodel) {
  const auto data = simulated(kAgent, 30, 12);
  FitOptions options;
  options.budget = 200;
  const VMixtureFit v = fit_vmixture({{"a", data}}, options);
  ASSERT_EQ(v.mixture.size(), 1u);
  EXPECT_NEAR(mixture_log_likelihood(v.mixture, data).value, v.voter_fits[0].train_ll, 1e-12);
  EXPECT_EQ(v.voter_fits[0].train_ll,
            fit_best_kind(CompiledDataset(data), options).train_ll);
}

TEST(FitVMixture, IdenticalVotersGiveIdenticalSubmodels) {
  const auto data = simulated(kAgent, 30, 13);
  FitOptions options;
  options.budget = 200;
  const VMixtureFit v = fit_vmixture({{"a", data}, {"b", data}}, options);
  ASSERT_EQ(v.mixture.size(), 2u);
  EXPECT_TRUE(v.mixture.uniform);
  EXPECT_EQ(v.mixture.submodels[0].kind, v.mixture.submodels[1].kind);
  EXPECT_EQ(v.mixture.submodels[0].weights, v.mixture.submodels[1].weights);
  EXPECT_THROW(fit_vmixture({}, options), ValidationError);
}

}  // namespace
}  // namespace indecision
