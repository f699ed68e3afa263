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

#ifndef INDECISION_EVALUATE_HPP_
#define INDECISION_EVALUATE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indecision/fitting.hpp"
#include "indecision/likelihood.hpp"
#include "indecision/random.hpp"
#include "indecision/types.hpp"

namespace indecision {

enum class Paradigm : std::uint8_t { kIndividual, kRepresentatives, kPopulation };

inline std::string_view paradigm_name(Paradigm p) {
  switch (p) {
    case Paradigm::kIndividual: return "individual";
    case Paradigm::kRepresentatives: return "representatives";
    case Paradigm::kPopulation: return "population";
  }
  return "unknown";
}

inline Paradigm paradigm_from_name(std::string_view name) {
  for (Paradigm p : {Paradigm::kIndividual, Paradigm::kRepresentatives,
                     Paradigm::kPopulation}) {
    if (paradigm_name(p) == name) return p;
  }
  throw ValidationError("unknown paradigm '" + std::string(name) + "'");
}

struct SplitSpec {
  Paradigm paradigm = Paradigm::kIndividual;
  std::size_t train_voter_count = 20;
  std::uint64_t seed = 0;
};

struct DataSplit {
  ResponseDataset train;
  ResponseDataset test;
};

// Sorted distinct voter ids.
inline std::vector<std::string> voters_of(const ResponseDataset& data) {
  std::set<std::string> ids;
  for (const auto& rec : data.records) ids.insert(rec.voter_id);
  return {ids.begin(), ids.end()};
}

inline std::map<std::string, ResponseDataset> by_voter(const ResponseDataset& data) {
  std::map<std::string, ResponseDataset> out;
  for (const auto& rec : data.records) {
    ResponseDataset& ds = out[rec.voter_id];
    ds.mode = data.mode;
    ds.records.push_back(rec);
  }
  return out;
}

// Random halves; odd counts put the extra record in training. Both halves
// keep the input order.
inline DataSplit split_individual(const ResponseDataset& data,
                                  std::uint64_t seed) {
  if (data.size() < 2) {
    throw ValidationError("splitting needs at least 2 records");
  }
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  shuffle_in_place(order, rng);
  const std::size_t n_train = (data.size() + 1) / 2;
  std::vector<bool> in_train(data.size(), false);
  for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;
  DataSplit out;
  out.train.mode = out.test.mode = data.mode;
  for (std::size_t i = 0; i < data.size(); ++i) {
    (in_train[i] ? out.train : out.test).records.push_back(data.records[i]);
  }
  return out;
}

enum class VoterType : std::uint8_t { kTrainVoter, kTestVoter };

struct GroupSplit {
  ResponseDataset train;
  ResponseDataset test;
  std::vector<VoterType> test_labels;  // aligned with test.records
  std::vector<std::string> train_voters;
};

// Representatives: half of each training voter's records go to test, the
// rest to train, other voters are dropped. Population: the same for
// training voters, plus every record of the other voters in test.
inline GroupSplit split_group(const ResponseDataset& data, const SplitSpec& spec) {
  if (spec.paradigm == Paradigm::kIndividual) {
    throw ValidationError("split_group needs a group paradigm");
  }
  std::vector<std::string> voters = voters_of(data);
  if (spec.train_voter_count == 0 || voters.size() < spec.train_voter_count) {
    throw ValidationError("need " + std::to_string(spec.train_voter_count) +
                          " training voters, data has " +
                          std::to_string(voters.size()));
  }
  Rng rng(spec.seed);
  shuffle_in_place(voters, rng);
  std::set<std::string> train_ids(voters.begin(),
                                  voters.begin() + spec.train_voter_count);

  GroupSplit out;
  out.train.mode = out.test.mode = data.mode;
  out.train_voters.assign(train_ids.begin(), train_ids.end());
  const auto per_voter = by_voter(data);
  std::size_t v = 0;
  for (const auto& [voter, records] : per_voter) {
    const std::uint64_t voter_seed = derive_seed(spec.seed, v++);
    if (train_ids.count(voter)) {
      DataSplit halves = split_individual(records, voter_seed);
      for (auto& rec : halves.train.records) out.train.records.push_back(std::move(rec));
      for (auto& rec : halves.test.records) {
        out.test.records.push_back(std::move(rec));
        out.test_labels.push_back(VoterType::kTrainVoter);
      }
    } else if (spec.paradigm == Paradigm::kPopulation) {
      for (const auto& rec : records.records) {
        out.test.records.push_back(rec);
        out.test_labels.push_back(VoterType::kTestVoter);
      }
    }
  }
  return out;
}

// ---- Ranking ---------------------------------------------------------------

struct ModelScore {
  ModelKind kind = ModelKind::kMinDelta;
  double train_ll = 0.0;
  double test_ll = 0.0;
};

struct VoterScores {
  std::string voter;
  std::vector<ModelScore> scores;
};

enum class RankBy : std::uint8_t { kTestLL, kTrainLL };

struct RankRow {
  ModelKind kind = ModelKind::kMinDelta;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t third = 0;
  double median_train_ll = 0.0;
  double median_test_ll = 0.0;
};

struct RankTable {
  RankBy by = RankBy::kTestLL;
  std::size_t voters = 0;
  std::vector<RankRow> rows;  // in kind order
};

inline double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// Per voter, models are ordered by the ranking LL (descending), then the
// other LL, then kind order; the top three positions are tallied.
inline RankTable rank_models(const std::vector<VoterScores>& voters,
                             RankBy by = RankBy::kTestLL) {
  std::set<ModelKind> kinds;
  for (const auto& v : voters) {
    for (const auto& s : v.scores) kinds.insert(s.kind);
  }
  RankTable table;
  table.by = by;
  table.voters = voters.size();
  std::map<ModelKind, std::size_t> row_of;
  for (ModelKind kind : kinds) {
    row_of[kind] = table.rows.size();
    table.rows.push_back({kind});
  }
  std::map<ModelKind, std::vector<double>> trains, tests;
  for (const auto& v : voters) {
    std::vector<ModelScore> scores = v.scores;
    std::set<ModelKind> seen;
    for (const auto& s : scores) {
      if (!seen.insert(s.kind).second) {
        throw ValidationError("voter '" + v.voter + "' has duplicate results for " +
                              std::string(kind_name(s.kind)));
      }
      trains[s.kind].push_back(s.train_ll);
      tests[s.kind].push_back(s.test_ll);
    }
    if (seen.size() != kinds.size()) {
      throw ValidationError("voter '" + v.voter + "' is missing model results");
    }
    std::sort(scores.begin(), scores.end(),
              [by](const ModelScore& a, const ModelScore& b) {
                const double pa = by == RankBy::kTestLL ? a.test_ll : a.train_ll;
                const double pb = by == RankBy::kTestLL ? b.test_ll : b.train_ll;
                if (pa != pb) return pa > pb;
                const double sa = by == RankBy::kTestLL ? a.train_ll : a.test_ll;
                const double sb = by == RankBy::kTestLL ? b.train_ll : b.test_ll;
                if (sa != sb) return sa > sb;
                return a.kind < b.kind;
              });
    for (std::size_t pos = 0; pos < std::min<std::size_t>(3, scores.size()); ++pos) {
      RankRow& row = table.rows[row_of[scores[pos].kind]];
      (pos == 0 ? row.first : pos == 1 ? row.second : row.third) += 1;
    }
  }
  for (RankRow& row : table.rows) {
    row.median_train_ll = median(trains[row.kind]);
    row.median_test_ll = median(tests[row.kind]);
  }
  return table;
}

// ---- Group report ----------------------------------------------------------

struct NamedFit {
  std::string name;
  FitResult fit;
};

struct ReportRow {
  std::string name;
  double train_ll = 0.0;
  double test_ll_train_voters = std::numeric_limits<double>::quiet_NaN();
  double test_ll_test_voters = std::numeric_limits<double>::quiet_NaN();
  double test_ll_all = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

// Mean that does not depend on the order of `values`.
inline double order_free_mean(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

inline std::vector<double> fit_record_log_likelihoods(const FitResult& fit,
                                                      const CompiledDataset& data) {
  if (fit.is_mixture()) return record_log_likelihoods(fit.mixture(), data);
  return record_log_likelihoods(fit.single(), data,
                                fit.policy ? &*fit.policy : nullptr);
}

}  // namespace detail

// Mean train LL and mean test LL overall and by voter type, per model.
inline std::vector<ReportRow> group_report(const std::vector<NamedFit>& fits,
                                           const GroupSplit& split) {
  const CompiledDataset train(split.train);
  std::optional<CompiledDataset> test;
  if (!split.test.empty()) test.emplace(split.test);
  std::vector<ReportRow> rows;
  for (const NamedFit& named : fits) {
    ReportRow row;
    row.name = named.name;
    row.train_ll =
        detail::order_free_mean(detail::fit_record_log_likelihoods(named.fit, train));
    if (test) {
      const std::vector<double> lls =
          detail::fit_record_log_likelihoods(named.fit, *test);
      std::vector<double> known, unknown;
      for (std::size_t i = 0; i < lls.size(); ++i) {
        (split.test_labels[i] == VoterType::kTrainVoter ? known : unknown)
            .push_back(lls[i]);
      }
      row.test_ll_train_voters = detail::order_free_mean(known);
      row.test_ll_test_voters = detail::order_free_mean(unknown);
      row.test_ll_all = detail::order_free_mean(lls);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- End-to-end pipelines --------------------------------------------------

// Default search budgets per experiment.
struct Budgets {
  std::size_t individual_indecisive = 1000;
  std::size_t individual_strict = 5000;
  std::size_t group_single = 5000;
  std::size_t vmixture_indecisive = 500;
  std::size_t vmixture_strict = 1000;
  std::size_t mixture = 100000;
};

struct VoterFit {
  std::string voter;
  ModelKind kind = ModelKind::kMinDelta;
  FitResult fit;
};

struct IndividualEvaluation {
  std::vector<VoterFit> fits;
  RankTable by_test;
  RankTable by_train;
};

// Per voter: split the records in half, fit every kind on the training half
// and score it on the other half.
inline IndividualEvaluation evaluate_individual(const ResponseDataset& data,
                                                const std::vector<ModelKind>& kinds,
                                                const Budgets& budgets,
                                                const FitOptions& base) {
  IndividualEvaluation out;
  std::vector<VoterScores> scores;
  FitOptions options = base;
  options.budget = data.mode == DatasetMode::kStrict ? budgets.individual_strict
                                                     : budgets.individual_indecisive;
  std::size_t v = 0;
  for (const auto& [voter, records] : by_voter(data)) {
    const DataSplit split = split_individual(records, derive_seed(base.seed, v++));
    const CompiledDataset train(split.train);
    const CompiledDataset test(split.test);
    VoterScores vs{voter, {}};
    for (ModelKind kind : kinds) {
      FitResult fit = fit_model(train, kind, options);
      fit.test_ll = evaluate_fit(fit, test).value;
      vs.scores.push_back({kind, fit.train_ll, *fit.test_ll});
      out.fits.push_back({voter, kind, std::move(fit)});
    }
    scores.push_back(std::move(vs));
  }
  out.by_test = rank_models(scores, RankBy::kTestLL);
  out.by_train = rank_models(scores, RankBy::kTrainLL);
  return out;
}

struct GroupEvaluation {
  GroupSplit split;
  std::vector<NamedFit> fits;
  std::vector<ReportRow> report;
};

// Fits the 2-mixture, the 2-min-delta mixture, the voter mixture and every
// single kind on the group training set and reports them.
inline GroupEvaluation evaluate_group(const ResponseDataset& data,
                                      const SplitSpec& spec,
                                      const std::vector<ModelKind>& kinds,
                                      const Budgets& budgets,
                                      const FitOptions& base,
                                      std::size_t mixture_k = 2) {
  GroupEvaluation out;
  out.split = split_group(data, spec);
  const CompiledDataset train(out.split.train);
  const std::string k = std::to_string(mixture_k);

  FitOptions options = base;
  options.budget = budgets.mixture;
  out.fits.push_back({k + "-mixture", fit_k_mixture(train, mixture_k, options)});
  out.fits.push_back({k + "-min-delta",
                      fit_k_mixture(train, mixture_k, options, ModelKind::kMinDelta)});

  options.budget = data.mode == DatasetMode::kStrict ? budgets.vmixture_strict
                                                     : budgets.vmixture_indecisive;
  std::map<std::string, ResponseDataset> per_voter = by_voter(out.split.train);
  VMixtureFit vmix = fit_vmixture(per_voter, options);
  FitResult vfit;
  vfit.model = vmix.mixture;
  vfit.train_ll = mixture_log_likelihood(vmix.mixture, train).value;
  vfit.budget = options.budget;
  vfit.seed = options.seed;
  out.fits.push_back({"vmixture", std::move(vfit)});

  options.budget = budgets.group_single;
  for (ModelKind kind : kinds) {
    out.fits.push_back({std::string(kind_name(kind)), fit_model(train, kind, options)});
  }
  out.report = group_report(out.fits, out.split);
  for (std::size_t i = 0; i < out.fits.size(); ++i) {
    out.fits[i].fit.test_ll = out.report[i].test_ll_all;
  }
  return out;
}

}  // namespace indecision

#endif  // INDECISION_EVALUATE_HPP_
