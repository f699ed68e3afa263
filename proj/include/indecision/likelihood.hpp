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

#ifndef INDECISION_LIKELIHOOD_HPP_
#define INDECISION_LIKELIHOOD_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indecision/distribution.hpp"
#include "indecision/scores.hpp"
#include "indecision/types.hpp"

namespace indecision {

// Mean per-record log-likelihood. If some record has probability zero the
// value is -inf and `zero_probability_record` names the first such record.
struct LogLikelihood {
  double value = 0.0;
  std::optional<std::size_t> zero_probability_record;

  bool finite() const { return !zero_probability_record.has_value(); }
};

// Dataset features laid out contiguously for repeated likelihood
// evaluation during search.
class CompiledDataset {
 public:
  explicit CompiledDataset(const ResponseDataset& data) : mode_(data.mode) {
    if (data.empty()) throw ValidationError("dataset is empty");
    check_dataset(data);
    dim_ = data.records.front().query.first.dimension();
    first_.reserve(data.size() * dim_);
    second_.reserve(data.size() * dim_);
    for (const ResponseRecord& rec : data.records) {
      first_.insert(first_.end(), rec.query.first.features.begin(),
                    rec.query.first.features.end());
      second_.insert(second_.end(), rec.query.second.features.begin(),
                     rec.query.second.features.end());
      responses_.push_back(rec.response);
    }
  }

  std::size_t size() const { return responses_.size(); }
  std::size_t dimension() const { return dim_; }
  DatasetMode mode() const { return mode_; }
  Response response(std::size_t i) const { return responses_[i]; }
  std::span<const double> first(std::size_t i) const {
    return {first_.data() + i * dim_, dim_};
  }
  std::span<const double> second(std::size_t i) const {
    return {second_.data() + i * dim_, dim_};
  }

 private:
  DatasetMode mode_;
  std::size_t dim_ = 0;
  std::vector<double> first_;
  std::vector<double> second_;
  std::vector<Response> responses_;
};

namespace detail {

inline double safe_log(double p) {
  return p > 0.0 ? std::log(p) : -std::numeric_limits<double>::infinity();
}

// log p(response | a, b) without validation. `policy` is consulted only for
// threshold models on strict data.
inline double record_log_probability(const IndecisionModel& model,
                                     const StrictPolicy* policy,
                                     DatasetMode mode,
                                     std::span<const double> a,
                                     std::span<const double> b, Response r) {
  if (mode == DatasetMode::kStrict) {
    if (!has_scores(model.kind)) return -std::numbers::ln2;
    const ScoreTriple s = scores_unchecked(model, a, b);
    if (model.kind == ModelKind::kLogit) return safe_log(strict_logit(s)[r]);
    return safe_log(strict_from_scores(s, *policy)[r]);
  }
  switch (model.kind) {
    case ModelKind::kUniformRand:
      return -std::log(3.0);
    case ModelKind::kNaiveRand:
      return r == Response::kIndecision ? safe_log(model.rand_q)
                                        : safe_log(0.5 * (1.0 - model.rand_q));
    default:
      return log_softmax(scores_unchecked(model, a, b), r);
  }
}

inline void check_for_dataset(const IndecisionModel& model,
                              const StrictPolicy* policy, DatasetMode mode,
                              std::size_t dim) {
  check_model(model);
  if (has_scores(model.kind)) check_dimensions(model, dim);
  if (mode == DatasetMode::kStrict && is_indecision_kind(model.kind)) {
    if (policy == nullptr) {
      throw ValidationError("strict data requires a strict policy for " +
                            std::string(kind_name(model.kind)));
    }
    check_policy(*policy);
  }
}

inline LogLikelihood mean_or_flag(double sum, std::size_t n,
                                  std::optional<std::size_t> zero) {
  if (zero) return {-std::numeric_limits<double>::infinity(), zero};
  return {sum / static_cast<double>(n), std::nullopt};
}

}  // namespace detail

// Mean log-likelihood on precompiled data; validation of the model happens
// here, the per-record loop is unchecked.
inline LogLikelihood log_likelihood(const IndecisionModel& model,
                                    const CompiledDataset& data,
                                    const StrictPolicy* policy = nullptr) {
  detail::check_for_dataset(model, policy, data.mode(), data.dimension());
  double sum = 0.0;
  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double lp = detail::record_log_probability(
        model, policy, data.mode(), data.first(i), data.second(i),
        data.response(i));
    if (lp == -std::numeric_limits<double>::infinity() && !zero) zero = i;
    sum += lp;
  }
  return detail::mean_or_flag(sum, data.size(), zero);
}

inline LogLikelihood log_likelihood(
    const IndecisionModel& model, const ResponseDataset& data,
    const std::optional<StrictPolicy>& policy = std::nullopt) {
  return log_likelihood(model, CompiledDataset(data),
                        policy ? &*policy : nullptr);
}

// Component probabilities: softmax of the weights, or 1/k when uniform.
inline std::vector<double> mixture_probabilities(const MixtureModel& mix) {
  const std::size_t k = mix.size();
  std::vector<double> pi(k, 1.0 / static_cast<double>(k));
  if (mix.uniform) return pi;
  const double m = *std::max_element(mix.weights.begin(), mix.weights.end());
  double total = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    pi[c] = std::exp(mix.weights[c] - m);
    total += pi[c];
  }
  for (double& p : pi) p /= total;
  return pi;
}

namespace detail {

// Validates a mixture against the data and returns log component weights.
inline std::vector<double> prepare_mixture(const MixtureModel& mix,
                                           const CompiledDataset& data) {
  check_mixture(mix);
  if (data.mode() == DatasetMode::kStrict && mix.policies.empty()) {
    throw ValidationError("strict data requires per-component strict policies");
  }
  for (std::size_t c = 0; c < mix.size(); ++c) {
    const StrictPolicy* policy =
        mix.policies.empty() ? nullptr : &mix.policies[c];
    check_for_dataset(mix.submodels[c], policy, data.mode(), data.dimension());
  }
  std::vector<double> log_pi = mixture_probabilities(mix);
  for (double& p : log_pi) p = safe_log(p);
  return log_pi;
}

// log sum_c pi_c p_c(record i); `terms` is scratch space of size k.
inline double mixture_record_log_probability(const MixtureModel& mix,
                                             std::span<const double> log_pi,
                                             const CompiledDataset& data,
                                             std::size_t i,
                                             std::span<double> terms) {
  const bool strict = data.mode() == DatasetMode::kStrict;
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < mix.size(); ++c) {
    const StrictPolicy* policy = strict ? &mix.policies[c] : nullptr;
    terms[c] = log_pi[c] + record_log_probability(
                               mix.submodels[c], policy, data.mode(),
                               data.first(i), data.second(i), data.response(i));
    m = std::max(m, terms[c]);
  }
  if (m == -std::numeric_limits<double>::infinity()) return m;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return m + std::log(acc);
}

}  // namespace detail

inline LogLikelihood mixture_log_likelihood(const MixtureModel& mix,
                                            const CompiledDataset& data) {
  const std::vector<double> log_pi = detail::prepare_mixture(mix, data);
  std::vector<double> terms(mix.size());
  double sum = 0.0;
  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double lp =
        detail::mixture_record_log_probability(mix, log_pi, data, i, terms);
    if (lp == -std::numeric_limits<double>::infinity() && !zero) zero = i;
    sum += lp;
  }
  return detail::mean_or_flag(sum, data.size(), zero);
}

// Per-record log probabilities (for reports that need order-independent
// aggregation or per-record breakdowns).
inline std::vector<double> record_log_likelihoods(
    const IndecisionModel& model, const CompiledDataset& data,
    const StrictPolicy* policy = nullptr) {
  detail::check_for_dataset(model, policy, data.mode(), data.dimension());
  std::vector<double> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = detail::record_log_probability(model, policy, data.mode(),
                                            data.first(i), data.second(i),
                                            data.response(i));
  }
  return out;
}

inline std::vector<double> record_log_likelihoods(const MixtureModel& mix,
                                                  const CompiledDataset& data) {
  const std::vector<double> log_pi = detail::prepare_mixture(mix, data);
  std::vector<double> terms(mix.size());
  std::vector<double> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = detail::mixture_record_log_probability(mix, log_pi, data, i, terms);
  }
  return out;
}

inline LogLikelihood mixture_log_likelihood(const MixtureModel& mix,
                                            const ResponseDataset& data) {
  return mixture_log_likelihood(mix, CompiledDataset(data));
}

}  // namespace indecision

#endif  // INDECISION_LIKELIHOOD_HPP_
