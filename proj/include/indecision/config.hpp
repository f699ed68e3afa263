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

// Run configuration and its key-value text format.
//
//   # comment
//   seed = 7
//   kinds = min-delta, max-u, logit
//   budget.mixture = 20000
//   lambda.difference = 0 2
//
// One `key = value` per line. Interval values are two numbers separated by
// whitespace. See README.md for the full key list.

#ifndef INDECISION_CONFIG_HPP_
#define INDECISION_CONFIG_HPP_

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "indecision/evaluate.hpp"
#include "indecision/param_space.hpp"
#include "indecision/simulate.hpp"
#include "indecision/types.hpp"

namespace indecision {

struct RunConfig {
  std::optional<DatasetMode> mode;  // inferred from data when unset
  std::vector<ModelKind> kinds{kAllKinds.begin(), kAllKinds.end()};
  Budgets budgets;
  ParamSpace space;
  FeatureSpec features;
  SplitSpec split;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::size_t mixture_k = 2;
  std::string out_dir = ".";
  StrictVariant strict_variant = StrictVariant::kClosedForm;
  MaxUVariant maxu_variant = MaxUVariant::kMainText;
};

inline void check_config(const RunConfig& config) {
  const Budgets& b = config.budgets;
  for (std::size_t v : {b.individual_indecisive, b.individual_strict, b.group_single,
                        b.vmixture_indecisive, b.vmixture_strict, b.mixture}) {
    if (v == 0) throw ValidationError("budgets must be >= 1");
  }
  if (config.kinds.empty()) throw ValidationError("no model kinds selected");
  if (config.mixture_k == 0) throw ValidationError("mixture k must be >= 1");
  check_feature_spec(config.features);
  ParamSpace space = config.space;
  check_space(space);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_config_number(std::string_view key, std::string_view value) {
  T out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw ValidationError("config key '" + std::string(key) + "': bad number '" +
                          std::string(value) + "'");
  }
  return out;
}

inline std::vector<std::string_view> split_list(std::string_view value, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(sep, start);
    if (end == std::string_view::npos) end = value.size();
    const std::string_view item = trim(value.substr(start, end - start));
    if (!item.empty()) out.push_back(item);
    start = end + 1;
  }
  return out;
}

inline Interval parse_interval(std::string_view key, std::string_view value) {
  const auto parts = split_list(value, ' ');
  if (parts.size() != 2) {
    throw ValidationError("config key '" + std::string(key) +
                          "' expects two numbers 'lo hi'");
  }
  return {parse_config_number<double>(key, parts[0]),
          parse_config_number<double>(key, parts[1])};
}

inline IntRange parse_int_range(std::string_view key, std::string_view value) {
  const Interval i = parse_interval(key, value);
  const IntRange r{static_cast<int>(i.lo), static_cast<int>(i.hi)};
  if (r.lo != i.lo || r.hi != i.hi) {
    throw ValidationError("config key '" + std::string(key) + "' expects integers");
  }
  return r;
}

}  // namespace detail

// Applies one entry to `config`. Unknown keys are errors.
inline void apply_config_entry(RunConfig& config, std::string_view key,
                               std::string_view value) {
  using detail::parse_config_number;
  auto size = [&] { return parse_config_number<std::size_t>(key, value); };
  const std::map<std::string_view, std::function<void()>> setters = {
      {"mode", [&] { config.mode = mode_from_name(value); }},
      {"kinds",
       [&] {
         config.kinds.clear();
         for (auto name : detail::split_list(value, ',')) {
           config.kinds.push_back(kind_from_name(name));
         }
       }},
      {"seed", [&] { config.seed = parse_config_number<std::uint64_t>(key, value); }},
      {"threads", [&] { config.threads = size(); }},
      {"out", [&] { config.out_dir = std::string(value); }},
      {"mixture_k", [&] { config.mixture_k = size(); }},
      {"strict_variant", [&] { config.strict_variant = strict_variant_from_name(value); }},
      {"maxu_variant", [&] { config.maxu_variant = maxu_variant_from_name(value); }},
      {"budget.individual_indecisive",
       [&] { config.budgets.individual_indecisive = size(); }},
      {"budget.individual_strict", [&] { config.budgets.individual_strict = size(); }},
      {"budget.group_single", [&] { config.budgets.group_single = size(); }},
      {"budget.vmixture_indecisive",
       [&] { config.budgets.vmixture_indecisive = size(); }},
      {"budget.vmixture_strict", [&] { config.budgets.vmixture_strict = size(); }},
      {"budget.mixture", [&] { config.budgets.mixture = size(); }},
      {"weights",
       [&] {
         config.space.weight_bounds.assign(config.space.n_features(),
                                           detail::parse_interval(key, value));
       }},
      {"lambda.difference",
       [&] { config.space.difference_lambda = detail::parse_interval(key, value); }},
      {"lambda.level",
       [&] { config.space.level_lambda = detail::parse_interval(key, value); }},
      {"q", [&] { config.space.q_bounds = detail::parse_interval(key, value); }},
      {"mixture_weights",
       [&] { config.space.mixture_weight_bounds = detail::parse_interval(key, value); }},
      {"features.age", [&] { config.features.age = detail::parse_int_range(key, value); }},
      {"features.drinks",
       [&] { config.features.drinks = detail::parse_int_range(key, value); }},
      {"features.dependents",
       [&] { config.features.dependents = detail::parse_int_range(key, value); }},
      {"split.paradigm", [&] { config.split.paradigm = paradigm_from_name(value); }},
      {"split.train_voters", [&] { config.split.train_voter_count = size(); }},
  };
  const auto it = setters.find(key);
  if (it == setters.end()) {
    throw ValidationError("unknown config key '" + std::string(key) + "'");
  }
  it->second();
}

inline void read_config(std::istream& in, RunConfig& config) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) +
                            ": expected 'key = value'");
    }
    const std::string_view key = detail::trim(view.substr(0, eq));
    const std::string_view value = detail::trim(view.substr(eq + 1));
    try {
      apply_config_entry(config, key, value);
    } catch (const ValidationError& e) {
      throw ValidationError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  check_config(config);
}

inline RunConfig load_config(const std::string& path, RunConfig config = {}) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config file '" + path + "' does not exist");
  read_config(in, config);
  return config;
}

}  // namespace indecision

#endif  // INDECISION_CONFIG_HPP_
