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

// Vote-count analysis of a fixed question list answered by two groups, one
// allowed to be indecisive and one forced to choose.

#ifndef INDECISION_STATS_HPP_
#define INDECISION_STATS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "indecision/types.hpp"

namespace indecision {

struct QuestionTally {
  std::size_t question = 0;
  double majority = 0.0;
  double minority = 0.0;
  double flips = 0.0;
  // Which item of the pair received more strict votes. On a tie the first
  // item is labelled the majority and `tie` is set.
  Response majority_item = Response::kPreferFirst;
  bool tie = false;
};

struct VoteTally {
  std::vector<QuestionTally> questions;  // ascending question index

  double total_majority() const {
    double s = 0.0;
    for (const auto& q : questions) s += q.majority;
    return s;
  }
  double total_minority() const {
    double s = 0.0;
    for (const auto& q : questions) s += q.minority;
    return s;
  }
  double total_flips() const {
    double s = 0.0;
    for (const auto& q : questions) s += q.flips;
    return s;
  }
};

namespace detail {

// Question index -> the query, checking that every record with that index
// shows the same pair of items and every voter saw the same questions.
inline std::map<std::size_t, ComparisonQuery> question_list(
    const ResponseDataset& data) {
  std::map<std::size_t, ComparisonQuery> questions;
  std::map<std::string, std::set<std::size_t>> seen;
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    const ResponseRecord& rec = data.records[i];
    if (!rec.query.id) {
      throw ValidationError("record " + std::to_string(i) + " has no question index");
    }
    const std::size_t q = *rec.query.id;
    auto [it, inserted] = questions.emplace(q, rec.query);
    if (!inserted && (it->second.first != rec.query.first ||
                      it->second.second != rec.query.second)) {
      throw ValidationError("question " + std::to_string(q) +
                            " shows different patients to different voters");
    }
    if (!seen[rec.voter_id].insert(q).second) {
      throw ValidationError("voter '" + rec.voter_id + "' answered question " +
                            std::to_string(q) + " twice");
    }
  }
  for (const auto& [voter, qs] : seen) {
    if (qs.size() != questions.size()) {
      throw ValidationError("voter '" + voter +
                            "' did not answer the shared question list");
    }
  }
  return questions;
}

}  // namespace detail

inline VoteTally tally_votes(const ResponseDataset& data) {
  if (data.empty()) throw ValidationError("no votes to tally");
  detail::question_list(data);
  std::map<std::size_t, std::array<double, 3>> counts;
  for (const auto& rec : data.records) {
    counts[*rec.query.id][static_cast<std::size_t>(rec.response)] += 1.0;
  }
  VoteTally tally;
  for (const auto& [q, c] : counts) {
    QuestionTally t;
    t.question = q;
    t.flips = c[0];
    t.tie = c[1] == c[2];
    t.majority_item = c[2] > c[1] ? Response::kPreferSecond : Response::kPreferFirst;
    t.majority = std::max(c[1], c[2]);
    t.minority = std::min(c[1], c[2]);
    tally.questions.push_back(t);
  }
  return tally;
}

// Each indecision vote counts as half a vote for both patients.
inline std::pair<double, double> effective_counts(double majority,
                                                  double minority,
                                                  double flips) {
  if (majority < 0 || minority < 0 || flips < 0) {
    throw ValidationError("vote counts must be nonnegative");
  }
  return {majority + 0.5 * flips, minority + 0.5 * flips};
}

struct ChiSquared {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Pearson chi-squared test of independence on the 2x2 table with rows
// `row_a` and `row_b` (df = 1). Cells may be fractional. The p-value is the
// chi-squared(1) survival function, erfc(sqrt(x / 2)).
inline ChiSquared chi_squared_2x2(std::pair<double, double> row_a,
                                  std::pair<double, double> row_b,
                                  bool continuity_correction = false) {
  const std::array<std::array<double, 2>, 2> obs = {
      {{row_a.first, row_a.second}, {row_b.first, row_b.second}}};
  double total = 0.0;
  std::array<double, 2> rows{}, cols{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!(obs[i][j] >= 0.0)) throw ValidationError("cells must be >= 0");
      rows[i] += obs[i][j];
      cols[j] += obs[i][j];
      total += obs[i][j];
    }
  }
  if (!(rows[0] > 0 && rows[1] > 0 && cols[0] > 0 && cols[1] > 0)) {
    throw ValidationError("chi-squared table has a zero marginal total");
  }
  ChiSquared out;
  out.statistic = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double expected = rows[i] * cols[j] / total;
      double diff = std::abs(obs[i][j] - expected);
      if (continuity_correction) diff = std::max(0.0, diff - 0.5);
      out.statistic += diff * diff / expected;
    }
  }
  out.p_value = std::erfc(std::sqrt(out.statistic / 2.0));
  return out;
}

struct HypothesisTest {
  ChiSquared result;
  bool rejected = false;
};

struct HypothesisReport {
  VoteTally indecisive;
  VoteTally strict;
  double indecisive_majority = 0.0;
  double indecisive_minority = 0.0;
  double indecisive_flips = 0.0;
  double effective_majority = 0.0;
  double effective_minority = 0.0;
  double strict_majority = 0.0;
  double strict_minority = 0.0;
  double alpha = 0.01;
  // Discard indecision votes.
  HypothesisTest h0_1;
  // Indecision votes as half a vote for each patient.
  HypothesisTest h0_2;
};

// Both tests from aggregate counts.
inline HypothesisReport hypothesis_tests_from_counts(
    double indecisive_majority, double indecisive_minority, double flips,
    double strict_majority, double strict_minority, double alpha = 0.01,
    bool continuity_correction = false) {
  HypothesisReport report;
  report.alpha = alpha;
  report.indecisive_majority = indecisive_majority;
  report.indecisive_minority = indecisive_minority;
  report.indecisive_flips = flips;
  report.strict_majority = strict_majority;
  report.strict_minority = strict_minority;
  std::tie(report.effective_majority, report.effective_minority) =
      effective_counts(indecisive_majority, indecisive_minority, flips);
  const std::pair<double, double> strict{strict_majority, strict_minority};
  report.h0_1.result = chi_squared_2x2({indecisive_majority, indecisive_minority},
                                       strict, continuity_correction);
  report.h0_2.result = chi_squared_2x2(
      {report.effective_majority, report.effective_minority}, strict,
      continuity_correction);
  report.h0_1.rejected = report.h0_1.result.p_value < alpha;
  report.h0_2.rejected = report.h0_2.result.p_value < alpha;
  return report;
}

// Tallies both groups (each group's majority comes from its own votes) and
// runs both tests on the summed counts.
inline HypothesisReport run_hypothesis_tests(const ResponseDataset& indecisive,
                                             const ResponseDataset& strict,
                                             double alpha = 0.01,
                                             bool continuity_correction = false) {
  const auto qa = detail::question_list(indecisive);
  const auto qb = detail::question_list(strict);
  if (qa.size() != qb.size()) {
    throw ValidationError("groups answered different question lists");
  }
  for (const auto& [q, query] : qa) {
    auto it = qb.find(q);
    if (it == qb.end() || it->second.first != query.first ||
        it->second.second != query.second) {
      throw ValidationError("groups answered different question lists");
    }
  }
  const VoteTally ti = tally_votes(indecisive);
  const VoteTally ts = tally_votes(strict);
  HypothesisReport report = hypothesis_tests_from_counts(
      ti.total_majority(), ti.total_minority(), ti.total_flips(),
      ts.total_majority(), ts.total_minority(), alpha, continuity_correction);
  report.indecisive = ti;
  report.strict = ts;
  return report;
}

}  // namespace indecision

#endif  // INDECISION_STATS_HPP_
