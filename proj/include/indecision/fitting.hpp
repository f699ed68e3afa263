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

// Maximum-likelihood fitting by quasi-random search: every candidate is a
// Sobol point decoded onto the parameter box, and the candidate with the
// largest mean training log-likelihood wins (lowest index on ties).

#ifndef INDECISION_FITTING_HPP_
#define INDECISION_FITTING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "indecision/likelihood.hpp"
#include "indecision/parallel.hpp"
#include "indecision/param_space.hpp"
#include "indecision/sobol.hpp"
#include "indecision/types.hpp"

namespace indecision {

struct FitOptions {
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  // 0: INDECISION_THREADS or hardware concurrency.
  std::size_t threads = 0;
  // Bounds and variant flags. `kind` and `strict` are set by the fit
  // functions from their arguments and the data.
  ParamSpace space;
};

struct FitResult {
  std::variant<IndecisionModel, MixtureModel> model;
  std::optional<StrictPolicy> policy;
  double train_ll = 0.0;
  std::optional<double> test_ll;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t candidate_index = 0;

  bool is_mixture() const {
    return std::holds_alternative<MixtureModel>(model);
  }
  const IndecisionModel& single() const {
    return std::get<IndecisionModel>(model);
  }
  const MixtureModel& mixture() const { return std::get<MixtureModel>(model); }
};

inline LogLikelihood evaluate_fit(const FitResult& fit,
                                  const CompiledDataset& data) {
  if (fit.is_mixture()) return mixture_log_likelihood(fit.mixture(), data);
  return log_likelihood(fit.single(), data,
                        fit.policy ? &*fit.policy : nullptr);
}

inline LogLikelihood evaluate_fit(const FitResult& fit,
                                  const ResponseDataset& data) {
  return evaluate_fit(fit, CompiledDataset(data));
}

namespace detail {

struct SearchOutcome {
  std::size_t index = 0;
  double value = -std::numeric_limits<double>::infinity();
  bool found = false;
};

// Evaluates candidates 0..budget-1 (Sobol indices 1..budget) and reduces to
// the best one. `eval` maps a unit-cube point to a LogLikelihood. With
// dim == 0 there is a single candidate.
template <class Eval>
SearchOutcome sobol_search(std::size_t dim, std::size_t budget,
                           std::uint64_t seed, std::size_t threads,
                           const Eval& eval) {
  if (budget == 0) throw ValidationError("search budget must be >= 1");
  if (dim == 0) {
    const LogLikelihood ll = eval(std::span<const double>{});
    if (!ll.finite()) return {};
    return {0, ll.value, true};
  }
  const SobolSequence sequence(dim, seed);
  const std::size_t workers = worker_count(threads);
  const std::size_t chunks = std::min(workers, budget);
  std::vector<SearchOutcome> partial(chunks);
  parallel_for(chunks, chunks, [&](std::size_t first_chunk, std::size_t last_chunk) {
    std::vector<double> point(dim);
    for (std::size_t chunk = first_chunk; chunk < last_chunk; ++chunk) {
      SearchOutcome best;
      const std::size_t begin = budget * chunk / chunks;
      const std::size_t end = budget * (chunk + 1) / chunks;
      for (std::size_t c = begin; c < end; ++c) {
        sequence.point(c + 1, point);
        const LogLikelihood ll = eval(std::span<const double>(point));
        if (ll.finite() && (!best.found || ll.value > best.value)) {
          best = {c, ll.value, true};
        }
      }
      partial[chunk] = best;
    }
  });
  SearchOutcome best;
  for (const SearchOutcome& p : partial) {
    // Chunks are in index order, so strict > keeps the lowest index on ties.
    if (p.found && (!best.found || p.value > best.value)) best = p;
  }
  return best;
}

inline ParamSpace prepare_space(ParamSpace space, ModelKind kind,
                                const CompiledDataset& data) {
  space.kind = kind;
  space.strict = data.mode() == DatasetMode::kStrict;
  if (space.n_features() != data.dimension()) {
    const bool uniform_box =
        std::all_of(space.weight_bounds.begin(), space.weight_bounds.end(),
                    [&](const Interval& iv) { return iv == space.weight_bounds.front(); });
    if (!uniform_box || space.weight_bounds.empty()) {
      throw ValidationError("weight bounds do not match the data dimension");
    }
    space.weight_bounds.assign(data.dimension(), space.weight_bounds.front());
  }
  check_space(space);
  return space;
}

inline std::vector<double> candidate_point(std::size_t dim, std::uint64_t seed,
                                           std::size_t index) {
  if (dim == 0) return {};
  return SobolSequence(dim, seed).point(index + 1);
}

}  // namespace detail

inline FitResult fit_model(const CompiledDataset& train, ModelKind kind,
                           const FitOptions& options) {
  const ParamSpace space = detail::prepare_space(options.space, kind, train);
  const std::size_t dim = search_dimension(space);
  const auto eval = [&](std::span<const double> point) {
    const DecodedModel d = decode_params(point, space);
    return log_likelihood(d.model, train, d.policy ? &*d.policy : nullptr);
  };
  const detail::SearchOutcome best =
      detail::sobol_search(dim, options.budget, options.seed, options.threads, eval);
  if (!best.found) {
    throw std::runtime_error("every candidate assigns zero probability to some "
                             "training record");
  }
  const DecodedModel d = decode_params(
      detail::candidate_point(dim, options.seed, best.index), space);
  FitResult fit;
  fit.model = d.model;
  fit.policy = d.policy;
  fit.train_ll = best.value;
  fit.budget = options.budget;
  fit.seed = options.seed;
  fit.candidate_index = best.index;
  return fit;
}

inline FitResult fit_model(const ResponseDataset& train, ModelKind kind,
                           const FitOptions& options) {
  return fit_model(CompiledDataset(train), kind, options);
}

// k-component mixture; `fixed_kind` pins every component to one kind (e.g.
// min-delta for the k-min-delta mixture), otherwise each component's kind
// is a searched categorical coordinate.
inline FitResult fit_k_mixture(const CompiledDataset& train, std::size_t k,
                               const FitOptions& options,
                               std::optional<ModelKind> fixed_kind = std::nullopt) {
  if (k == 0) throw ValidationError("mixture needs k >= 1");
  const ParamSpace space = detail::prepare_space(
      options.space, fixed_kind.value_or(ModelKind::kMinDelta), train);
  const std::size_t dim = mixture_search_dimension(space, k, !fixed_kind);
  const auto eval = [&](std::span<const double> point) {
    return mixture_log_likelihood(decode_mixture(point, space, k, fixed_kind),
                                  train);
  };
  const detail::SearchOutcome best =
      detail::sobol_search(dim, options.budget, options.seed, options.threads, eval);
  if (!best.found) {
    throw std::runtime_error("every mixture candidate assigns zero probability "
                             "to some training record");
  }
  FitResult fit;
  fit.model = decode_mixture(detail::candidate_point(dim, options.seed, best.index),
                             space, k, fixed_kind);
  fit.train_ll = best.value;
  fit.budget = options.budget;
  fit.seed = options.seed;
  fit.candidate_index = best.index;
  return fit;
}

inline FitResult fit_k_mixture(const ResponseDataset& train, std::size_t k,
                               const FitOptions& options,
                               std::optional<ModelKind> fixed_kind = std::nullopt) {
  return fit_k_mixture(CompiledDataset(train), k, options, fixed_kind);
}

// Best threshold model (by training LL, earlier kind on ties) for one voter.
inline FitResult fit_best_kind(const CompiledDataset& train,
                               const FitOptions& options) {
  std::optional<FitResult> best;
  for (ModelKind kind : kIndecisionKinds) {
    FitResult fit = fit_model(train, kind, options);
    if (!best || fit.train_ll > best->train_ll) best = std::move(fit);
  }
  return *best;
}

struct VMixtureFit {
  MixtureModel mixture;
  std::vector<std::string> voters;
  std::vector<FitResult> voter_fits;  // aligned with `voters`
};

// Uniform mixture of per-voter best fits. Voters are processed in key order
// and all use the same search seed, so equal data gives equal submodels.
inline VMixtureFit fit_vmixture(
    const std::map<std::string, ResponseDataset>& per_voter_train,
    const FitOptions& options) {
  if (per_voter_train.empty()) throw ValidationError("vmixture needs >= 1 voter");
  VMixtureFit out;
  std::vector<const ResponseDataset*> data;
  for (const auto& [voter, ds] : per_voter_train) {
    if (ds.empty()) {
      throw ValidationError("voter '" + voter + "' has no training records");
    }
    out.voters.push_back(voter);
    data.push_back(&ds);
  }
  out.voter_fits.resize(data.size());
  // Per-voter searches run one after another, each parallel internally.
  for (std::size_t v = 0; v < data.size(); ++v) {
    out.voter_fits[v] = fit_best_kind(CompiledDataset(*data[v]), options);
  }
  out.mixture.uniform = true;
  for (const FitResult& fit : out.voter_fits) {
    out.mixture.submodels.push_back(fit.single());
    out.mixture.weights.push_back(0.0);
    if (fit.policy) out.mixture.policies.push_back(*fit.policy);
  }
  return out;
}

}  // namespace indecision

#endif  // INDECISION_FITTING_HPP_
