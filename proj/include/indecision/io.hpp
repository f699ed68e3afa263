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

// File formats: the response CSV, the JSON fit-result schema and the CSV
// report tables.
//
// Response CSV (UTF-8, comma separated, LF line endings, no quoting):
//   voter_id,question_idx,a_age,a_drinks,a_dependents,b_age,b_drinks,
//   b_dependents,response,group
// response is 0 (indecision), 1 (prefer A) or 2 (prefer B); group is
// "indecisive" or "strict" and must be the same on every row.

#ifndef INDECISION_IO_HPP_
#define INDECISION_IO_HPP_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "indecision/evaluate.hpp"
#include "indecision/fitting.hpp"
#include "indecision/simulate.hpp"
#include "indecision/stats.hpp"
#include "indecision/types.hpp"

namespace indecision {

inline constexpr std::string_view kCsvHeader =
    "voter_id,question_idx,a_age,a_drinks,a_dependents,b_age,b_drinks,"
    "b_dependents,response,group";

// Shortest representation that parses back to the same double.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

inline double parse_double(std::string_view field, std::size_t line,
                           const char* column) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ValidationError("line " + std::to_string(line) + ": column " + column +
                          " is not a number: '" + std::string(field) + "'");
  }
  return value;
}

inline long parse_integer(std::string_view field, std::size_t line,
                          const char* column) {
  long value = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ValidationError("line " + std::to_string(line) + ": column " + column +
                          " is not an integer: '" + std::string(field) + "'");
  }
  return value;
}

inline void check_feature(double value, const IntRange& range, std::size_t line,
                          const char* column, std::vector<std::string>* warnings) {
  if (warnings == nullptr) return;
  if (value != std::floor(value) || !range.contains(value)) {
    warnings->push_back("line " + std::to_string(line) + ": " + column + "=" +
                        format_number(value) + " is outside the declared range [" +
                        std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                        "] or not an integer");
  }
}

}  // namespace detail

// Parses the response CSV. Feature values outside the declared ranges (or
// non-integer) are accepted and reported through `warnings`.
inline ResponseDataset read_dataset(std::istream& in, const FeatureSpec& spec = {},
                                    std::vector<std::string>* warnings = nullptr) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty dataset file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) {
    const auto got = detail::split_commas(line);
    const auto want = detail::split_commas(kCsvHeader);
    for (std::size_t c = 0; c < want.size(); ++c) {
      if (c >= got.size() || got[c] != want[c]) {
        throw ValidationError("header: missing column '" + std::string(want[c]) +
                              "' at position " + std::to_string(c + 1));
      }
    }
    throw ValidationError("header has unexpected extra columns");
  }
  ResponseDataset data;
  std::optional<DatasetMode> mode;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = detail::split_commas(line);
    if (f.size() != 10) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 10 fields, got " +
                            std::to_string(f.size()));
    }
    ResponseRecord rec;
    rec.voter_id = std::string(f[0]);
    if (rec.voter_id.empty()) {
      throw ValidationError("line " + std::to_string(line_no) + ": empty voter_id");
    }
    const long q = detail::parse_integer(f[1], line_no, "question_idx");
    if (q < 0) {
      throw ValidationError("line " + std::to_string(line_no) + ": negative question_idx");
    }
    PatientProfile a{detail::parse_double(f[2], line_no, "a_age"),
                     detail::parse_double(f[3], line_no, "a_drinks"),
                     detail::parse_double(f[4], line_no, "a_dependents")};
    PatientProfile b{detail::parse_double(f[5], line_no, "b_age"),
                     detail::parse_double(f[6], line_no, "b_drinks"),
                     detail::parse_double(f[7], line_no, "b_dependents")};
    detail::check_feature(a.age, spec.age, line_no, "a_age", warnings);
    detail::check_feature(a.drinks, spec.drinks, line_no, "a_drinks", warnings);
    detail::check_feature(a.dependents, spec.dependents, line_no, "a_dependents", warnings);
    detail::check_feature(b.age, spec.age, line_no, "b_age", warnings);
    detail::check_feature(b.drinks, spec.drinks, line_no, "b_drinks", warnings);
    detail::check_feature(b.dependents, spec.dependents, line_no, "b_dependents", warnings);
    const long code = detail::parse_integer(f[8], line_no, "response");
    if (code < 0 || code > 2) {
      throw ValidationError("line " + std::to_string(line_no) + ": response code " +
                            std::to_string(code) + " is not 0, 1 or 2");
    }
    rec.response = static_cast<Response>(code);
    DatasetMode row_mode;
    try {
      row_mode = mode_from_name(f[9]);
    } catch (const ValidationError&) {
      throw ValidationError("line " + std::to_string(line_no) + ": unknown group '" +
                            std::string(f[9]) + "'");
    }
    if (mode && *mode != row_mode) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": file mixes indecisive and strict groups");
    }
    mode = row_mode;
    if (row_mode == DatasetMode::kStrict && rec.response == Response::kIndecision) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": indecision response in a strict-group file");
    }
    rec.query = {spec.make_item(a), spec.make_item(b), static_cast<std::size_t>(q)};
    data.records.push_back(std::move(rec));
  }
  if (data.empty()) throw ValidationError("dataset file has no records");
  data.mode = *mode;
  return data;
}

inline ResponseDataset load_dataset(const std::string& path, const FeatureSpec& spec = {},
                                    std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open dataset '" + path + "'");
  return read_dataset(in, spec, warnings);
}

inline void write_dataset(std::ostream& out, const ResponseDataset& data) {
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    const ResponseRecord& rec = data.records[i];
    if (!rec.query.first.raw || !rec.query.second.raw) {
      throw ValidationError("record " + std::to_string(i) +
                            " has no raw patient attributes to write");
    }
    if (rec.voter_id.find(',') != std::string::npos) {
      throw ValidationError("voter ids cannot contain commas");
    }
    const PatientProfile& a = *rec.query.first.raw;
    const PatientProfile& b = *rec.query.second.raw;
    out << rec.voter_id << ',' << rec.query.id.value_or(i) << ','
        << format_number(a.age) << ',' << format_number(a.drinks) << ','
        << format_number(a.dependents) << ',' << format_number(b.age) << ','
        << format_number(b.drinks) << ',' << format_number(b.dependents) << ','
        << response_code(rec.response) << ',' << mode_name(data.mode) << '\n';
  }
}

inline void save_dataset(const std::string& path, const ResponseDataset& data) {
  std::ostringstream buffer;
  write_dataset(buffer, data);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << buffer.str();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// ---- JSON ------------------------------------------------------------------

using Json = nlohmann::ordered_json;

namespace detail {

inline Json number_or_string(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

inline double number_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ValidationError("bad number '" + s + "'");
  }
  return j.get<double>();
}

inline Json model_json(const IndecisionModel& model,
                       const std::optional<StrictPolicy>& policy) {
  Json j;
  j["model_kind"] = std::string(kind_name(model.kind));
  j["weights"] = model.weights;
  if (is_indecision_kind(model.kind)) {
    j["lambda"] = model.threshold;
  } else {
    j["lambda"] = nullptr;
  }
  if (policy) {
    j["q"] = policy->q;
    j["strict_variant"] = std::string(strict_variant_name(policy->variant));
  } else if (model.kind == ModelKind::kNaiveRand) {
    j["q"] = model.rand_q;
  } else {
    j["q"] = nullptr;
  }
  if (model.kind == ModelKind::kMaxU) {
    j["maxu_variant"] = std::string(maxu_variant_name(model.maxu_variant));
  }
  return j;
}

inline std::pair<IndecisionModel, std::optional<StrictPolicy>> model_from_json(
    const Json& j) {
  IndecisionModel model;
  model.kind = kind_from_name(j.at("model_kind").get<std::string>());
  model.weights = j.at("weights").get<std::vector<double>>();
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    model.threshold = j["lambda"].get<double>();
  }
  if (j.contains("maxu_variant")) {
    model.maxu_variant = maxu_variant_from_name(j["maxu_variant"].get<std::string>());
  }
  std::optional<StrictPolicy> policy;
  if (j.contains("strict_variant")) {
    policy = StrictPolicy{j.at("q").get<double>(),
                          strict_variant_from_name(j["strict_variant"].get<std::string>())};
  } else if (model.kind == ModelKind::kNaiveRand && !j.at("q").is_null()) {
    model.rand_q = j["q"].get<double>();
  }
  return {model, policy};
}

}  // namespace detail

// JSON fields: model_kind, weights, lambda, q, train_ll, test_ll, seed,
// budget, candidate_index. Mixtures use model_kind "mixture" and add
// components, mixture_weights and uniform.
inline Json fit_to_json(const FitResult& fit, const std::string& name = "") {
  Json j;
  if (!name.empty()) j["name"] = name;
  if (fit.is_mixture()) {
    const MixtureModel& mix = fit.mixture();
    j["model_kind"] = "mixture";
    j["weights"] = Json::array();
    j["lambda"] = nullptr;
    j["q"] = nullptr;
    Json comps = Json::array();
    for (std::size_t c = 0; c < mix.size(); ++c) {
      std::optional<StrictPolicy> policy;
      if (!mix.policies.empty()) policy = mix.policies[c];
      comps.push_back(detail::model_json(mix.submodels[c], policy));
    }
    j["components"] = comps;
    j["mixture_weights"] = mix.weights;
    j["uniform"] = mix.uniform;
  } else {
    Json m = detail::model_json(fit.single(), fit.policy);
    for (auto it = m.begin(); it != m.end(); ++it) j[it.key()] = it.value();
  }
  j["train_ll"] = detail::number_or_string(fit.train_ll);
  j["test_ll"] = fit.test_ll ? detail::number_or_string(*fit.test_ll) : Json(nullptr);
  j["seed"] = fit.seed;
  j["budget"] = fit.budget;
  j["candidate_index"] = fit.candidate_index;
  return j;
}

inline FitResult fit_from_json(const Json& j) {
  FitResult fit;
  if (j.at("model_kind").get<std::string>() == "mixture") {
    MixtureModel mix;
    for (const Json& c : j.at("components")) {
      auto [model, policy] = detail::model_from_json(c);
      mix.submodels.push_back(model);
      if (policy) mix.policies.push_back(*policy);
    }
    mix.weights = j.at("mixture_weights").get<std::vector<double>>();
    mix.uniform = j.at("uniform").get<bool>();
    fit.model = mix;
  } else {
    auto [model, policy] = detail::model_from_json(j);
    fit.model = model;
    fit.policy = policy;
  }
  fit.train_ll = detail::number_from_json(j.at("train_ll"));
  if (!j.at("test_ll").is_null()) fit.test_ll = detail::number_from_json(j["test_ll"]);
  fit.seed = j.at("seed").get<std::uint64_t>();
  fit.budget = j.at("budget").get<std::size_t>();
  fit.candidate_index = j.at("candidate_index").get<std::size_t>();
  return fit;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

// Writes `results` as a JSON array of fit records.
inline void save_results(const std::vector<NamedFit>& results, const std::string& path) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(fit_to_json(r.fit, r.name));
  write_text_file(path, dump_json(arr));
}

inline std::vector<NamedFit> load_results(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open results '" + path + "'");
  Json arr;
  try {
    arr = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("results file '" + path + "' is not valid JSON: " + e.what());
  }
  if (arr.is_object()) arr = Json::array({arr});
  std::vector<NamedFit> out;
  for (const Json& j : arr) {
    out.push_back({j.value("name", std::string(j.at("model_kind").get<std::string>())),
                   fit_from_json(j)});
  }
  return out;
}

// ---- Tables ----------------------------------------------------------------

inline std::string percent(std::size_t count, std::size_t total) {
  if (total == 0) return "0";
  const double pct = std::round(100.0 * static_cast<double>(count) /
                                static_cast<double>(total));
  return format_number(pct);
}

// Columns follow the ranking table layout: counts of voters for which the
// model is 1st / 2nd / 3rd (with percentages), then median train and test LL.
inline std::string rank_table_csv(const RankTable& table) {
  std::ostringstream out;
  out << "model,first,first_pct,second,second_pct,third,third_pct,train_ll,"
         "test_ll\n";
  for (const RankRow& row : table.rows) {
    out << kind_name(row.kind) << ',' << row.first << ','
        << percent(row.first, table.voters) << ',' << row.second << ','
        << percent(row.second, table.voters) << ',' << row.third << ','
        << percent(row.third, table.voters) << ','
        << format_number(row.median_train_ll) << ','
        << format_number(row.median_test_ll) << '\n';
  }
  return out.str();
}

inline std::string group_report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "model,train_ll,test_ll_train_voters,test_ll_test_voters,test_ll_all\n";
  for (const ReportRow& row : rows) {
    out << row.name << ',' << format_number(row.train_ll) << ','
        << format_number(row.test_ll_train_voters) << ','
        << format_number(row.test_ll_test_voters) << ','
        << format_number(row.test_ll_all) << '\n';
  }
  return out.str();
}

inline std::string tally_csv(const VoteTally& indecisive, const VoteTally& strict) {
  std::ostringstream out;
  out << "question_idx,indecisive_majority,indecisive_minority,indecisive_flips,"
         "indecisive_tie,strict_majority,strict_minority,strict_tie\n";
  for (std::size_t i = 0; i < indecisive.questions.size(); ++i) {
    const QuestionTally& a = indecisive.questions[i];
    const QuestionTally& b = strict.questions[i];
    out << a.question << ',' << format_number(a.majority) << ','
        << format_number(a.minority) << ',' << format_number(a.flips) << ','
        << (a.tie ? 1 : 0) << ',' << format_number(b.majority) << ','
        << format_number(b.minority) << ',' << (b.tie ? 1 : 0) << '\n';
  }
  return out.str();
}

inline Json hypothesis_json(const HypothesisReport& r) {
  auto test = [](const HypothesisTest& t) {
    Json j;
    j["statistic"] = t.result.statistic;
    j["p_value"] = t.result.p_value;
    j["rejected"] = t.rejected;
    return j;
  };
  Json j;
  j["alpha"] = r.alpha;
  j["indecisive"] = {{"majority", r.indecisive_majority},
                     {"minority", r.indecisive_minority},
                     {"flips", r.indecisive_flips},
                     {"effective_majority", r.effective_majority},
                     {"effective_minority", r.effective_minority}};
  j["strict"] = {{"majority", r.strict_majority}, {"minority", r.strict_minority}};
  j["h0_1"] = test(r.h0_1);
  j["h0_2"] = test(r.h0_2);
  return j;
}

}  // namespace indecision

#endif  // INDECISION_IO_HPP_
