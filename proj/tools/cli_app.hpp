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

// Command-line front end. Exit codes: 0 success, 1 validation or usage
// error, 2 runtime failure (including equivalence mismatches).

#ifndef INDECISION_TOOLS_CLI_APP_HPP_
#define INDECISION_TOOLS_CLI_APP_HPP_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "indecision/indecision.hpp"

namespace indecision::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::string> strict_variant;
  std::optional<std::string> maxu_variant;
  std::optional<std::size_t> threads;
};

inline RunConfig resolve_config(const GlobalFlags& flags) {
  RunConfig config;
  if (flags.config) config = load_config(*flags.config);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out_dir = *flags.out;
  if (flags.strict_variant) {
    config.strict_variant = strict_variant_from_name(*flags.strict_variant);
  }
  if (flags.maxu_variant) config.maxu_variant = maxu_variant_from_name(*flags.maxu_variant);
  if (flags.threads) config.threads = *flags.threads;
  config.space.strict_variant = config.strict_variant;
  config.space.maxu_variant = config.maxu_variant;
  config.split.seed = config.seed;
  check_config(config);
  return config;
}

inline std::string out_path(const RunConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  return (std::filesystem::path(config.out_dir) / name).string();
}

inline FitOptions fit_options(const RunConfig& config, std::size_t budget) {
  FitOptions options;
  options.budget = budget;
  options.seed = config.seed;
  options.threads = config.threads;
  options.space = config.space;
  return options;
}

inline ResponseDataset load_with_warnings(const std::string& path,
                                          const RunConfig& config, std::ostream& err) {
  std::vector<std::string> warnings;
  ResponseDataset data = load_dataset(path, config.features, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  if (config.mode && *config.mode != data.mode) {
    throw ValidationError("dataset '" + path + "' is " + std::string(mode_name(data.mode)) +
                          " but the config asks for " +
                          std::string(mode_name(*config.mode)));
  }
  return data;
}

// "min-delta:0.5,max-u:0.5" (a bare kind name means weight 1).
inline std::vector<std::pair<ModelKind, double>> parse_kind_mix(const std::string& text) {
  std::vector<std::pair<ModelKind, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    const ModelKind kind = kind_from_name(item.substr(0, colon));
    double p = 1.0;
    if (colon != std::string::npos) {
      try {
        std::size_t used = 0;
        p = std::stod(item.substr(colon + 1), &used);
        if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("bad kind weight in '" + item + "'");
      }
    }
    out.emplace_back(kind, p);
  }
  if (out.empty()) throw ValidationError("no agent kinds given");
  double total = 0.0;
  for (const auto& [k, p] : out) total += p;
  if (!(total > 0.0)) throw ValidationError("agent kind weights must sum to > 0");
  for (auto& [k, p] : out) p /= total;
  return out;
}

struct SimulateArgs {
  std::size_t voters = 100;
  std::size_t queries = kDefaultQueryCount;
  std::string agents = "min-delta";
  std::string output = "dataset.csv";
  std::optional<std::string> mode;
  bool shared_queries = false;
  std::optional<std::uint64_t> query_seed;
};

inline int run_simulate(const RunConfig& config, const SimulateArgs& args,
                        std::ostream& out) {
  if (args.voters == 0) throw ValidationError("--voters must be >= 1");
  if (args.queries == 0) throw ValidationError("--queries must be >= 1");
  const DatasetMode mode = args.mode ? mode_from_name(*args.mode)
                                     : config.mode.value_or(DatasetMode::kIndecisive);
  PopulationSpec spec;
  spec.count = args.voters;
  spec.kind_distribution = parse_kind_mix(args.agents);
  spec.bounds = config.space;
  spec.bounds.weight_bounds.resize(FeatureSpec::kDimension,
                                   config.space.weight_bounds.front());
  spec.q_bounds = config.space.q_bounds;
  spec.strict_variant = config.strict_variant;
  spec.maxu_variant = config.maxu_variant;
  Rng rng(derive_seed(config.seed, 0));
  const std::vector<Agent> agents = generate_population(spec, rng);
  ResponseDataset data;
  if (args.shared_queries) {
    Rng qrng(derive_seed(args.query_seed.value_or(config.seed), 1));
    const auto queries = generate_queries(config.features, qrng, args.queries);
    data.mode = mode;
    for (std::size_t v = 0; v < agents.size(); ++v) {
      Rng vrng(derive_seed(derive_seed(config.seed, 2), v));
      ResponseDataset one = simulate_agent(agents[v].model, agents[v].policy, queries,
                                           mode, vrng, agents[v].voter_id);
      for (auto& rec : one.records) data.records.push_back(std::move(rec));
    }
  } else {
    data = simulate_population(agents, config.features, args.queries, mode,
                               derive_seed(config.seed, 2));
  }
  const std::string path = out_path(config, args.output);
  save_dataset(path, data);
  out << "wrote " << data.size() << " records from " << agents.size() << " voters to "
      << path << '\n';
  return kExitOk;
}

struct FitArgs {
  std::string data;
  std::optional<std::string> test;
  std::string model = "min-delta";
  std::optional<std::size_t> budget;
  std::size_t k = 2;
  std::string output = "fit.json";
};

inline int run_fit(const RunConfig& config, const FitArgs& args, std::ostream& out,
                   std::ostream& err) {
  const ResponseDataset train = load_with_warnings(args.data, config, err);
  const bool strict = train.mode == DatasetMode::kStrict;
  const bool mixture = args.model == "mixture" || args.model == "k-mixture";
  const std::size_t budget =
      args.budget.value_or(mixture ? config.budgets.mixture
                                   : (strict ? config.budgets.individual_strict
                                             : config.budgets.individual_indecisive));
  if (budget == 0) throw ValidationError("--budget must be >= 1");
  const FitOptions options = fit_options(config, budget);
  FitResult fit = mixture ? fit_k_mixture(train, args.k, options)
                          : fit_model(train, kind_from_name(args.model), options);
  if (args.test) {
    const ResponseDataset test = load_with_warnings(*args.test, config, err);
    fit.test_ll = evaluate_fit(fit, test).value;
  }
  const std::string path = out_path(config, args.output);
  save_results({{args.model, fit}}, path);
  out << args.model << " train_ll=" << format_number(fit.train_ll);
  if (fit.test_ll) out << " test_ll=" << format_number(*fit.test_ll);
  out << " -> " << path << '\n';
  return kExitOk;
}

struct EvaluateArgs {
  std::string data;
  std::optional<std::string> paradigm;
  std::optional<std::size_t> train_voters;
};

inline int run_evaluate(RunConfig config, const EvaluateArgs& args, std::ostream& out,
                        std::ostream& err) {
  const ResponseDataset data = load_with_warnings(args.data, config, err);
  if (args.paradigm) config.split.paradigm = paradigm_from_name(*args.paradigm);
  if (args.train_voters) config.split.train_voter_count = *args.train_voters;
  const FitOptions base = fit_options(config, 1);
  if (config.split.paradigm == Paradigm::kIndividual) {
    const IndividualEvaluation eval =
        evaluate_individual(data, config.kinds, config.budgets, base);
    std::vector<NamedFit> fits;
    for (const auto& vf : eval.fits) {
      fits.push_back({vf.voter + "/" + std::string(kind_name(vf.kind)), vf.fit});
    }
    save_results(fits, out_path(config, "fits.json"));
    write_text_file(out_path(config, "rank_test.csv"), rank_table_csv(eval.by_test));
    write_text_file(out_path(config, "rank_train.csv"), rank_table_csv(eval.by_train));
    out << rank_table_csv(eval.by_test);
  } else {
    const GroupEvaluation eval = evaluate_group(data, config.split, config.kinds,
                                                config.budgets, base, config.mixture_k);
    save_results(eval.fits, out_path(config, "fits.json"));
    write_text_file(out_path(config, "report.csv"), group_report_csv(eval.report));
    out << group_report_csv(eval.report);
  }
  return kExitOk;
}

struct HypothesisArgs {
  std::optional<std::string> indecisive;
  std::optional<std::string> strict;
  std::vector<double> counts;
  double alpha = 0.01;
  bool continuity = false;
};

inline int run_hypothesis(const RunConfig& config, const HypothesisArgs& args,
                          std::ostream& out, std::ostream& err) {
  HypothesisReport report;
  if (!args.counts.empty()) {
    if (args.counts.size() != 5) {
      throw ValidationError("--counts takes 5 numbers: majority minority flips "
                            "strict_majority strict_minority");
    }
    report = hypothesis_tests_from_counts(args.counts[0], args.counts[1], args.counts[2],
                                          args.counts[3], args.counts[4], args.alpha,
                                          args.continuity);
  } else {
    if (!args.indecisive || !args.strict) {
      throw ValidationError("give --indecisive and --strict datasets, or --counts");
    }
    const ResponseDataset a = load_with_warnings(*args.indecisive, config, err);
    const ResponseDataset b = load_with_warnings(*args.strict, config, err);
    if (a.mode != DatasetMode::kIndecisive || b.mode != DatasetMode::kStrict) {
      throw ValidationError("--indecisive must be an indecisive-group file and "
                            "--strict a strict-group file");
    }
    report = run_hypothesis_tests(a, b, args.alpha, args.continuity);
    write_text_file(out_path(config, "tally.csv"),
                    tally_csv(report.indecisive, report.strict));
  }
  const std::string text = dump_json(hypothesis_json(report));
  write_text_file(out_path(config, "hypothesis.json"), text);
  out << text;
  return kExitOk;
}

struct EquivalenceArgs {
  std::size_t trials = 10000;
  double tolerance = 1e-9;
};

inline int run_equivalence(const RunConfig& config, const EquivalenceArgs& args,
                           std::ostream& out) {
  if (args.trials == 0) throw ValidationError("--trials must be >= 1");
  const EquivalenceReport report =
      run_equivalence_check(args.trials, config.seed, args.tolerance);
  Json j;
  j["trials_per_kind"] = args.trials;
  j["seed"] = config.seed;
  Json kinds = Json::array();
  for (const KindEquivalence& k : report.kinds) {
    Json row;
    row["kind"] = std::string(kind_name(k.kind));
    if (k.kind == ModelKind::kMaxU) {
      row["maxu_variant"] = std::string(maxu_variant_name(k.maxu_variant));
    }
    row["trials"] = k.trials;
    row["tie_trials"] = k.tie_trials;
    row["mismatches"] = k.mismatches;
    kinds.push_back(row);
    out << kind_name(k.kind) << ": " << k.mismatches << " mismatches in " << k.trials
        << " trials\n";
  }
  j["kinds"] = kinds;
  j["main_text_counterexample_reproduced"] = report.main_text_counterexample_reproduced;
  j["passed"] = report.passed();
  write_text_file(out_path(config, "equivalence.json"), dump_json(j));
  out << "max-u main-text counterexample reproduced: "
      << (report.main_text_counterexample_reproduced ? "yes" : "no") << '\n';
  out << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitRuntime;
}

struct ReportArgs {
  std::string results;
  std::string output = "results.csv";
};

inline int run_report(const RunConfig& config, const ReportArgs& args, std::ostream& out) {
  const std::vector<NamedFit> fits = load_results(args.results);
  std::ostringstream csv;
  csv << "name,model_kind,train_ll,test_ll,budget,seed,candidate_index\n";
  for (const NamedFit& f : fits) {
    const std::string kind =
        f.fit.is_mixture() ? "mixture" : std::string(kind_name(f.fit.single().kind));
    csv << f.name << ',' << kind << ',' << format_number(f.fit.train_ll) << ','
        << (f.fit.test_ll ? format_number(*f.fit.test_ll) : "") << ',' << f.fit.budget
        << ',' << f.fit.seed << ',' << f.fit.candidate_index << '\n';
  }
  write_text_file(out_path(config, args.output), csv.str());
  out << csv.str();
  return kExitOk;
}

// Runs the CLI on `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Indecision modeling toolkit", "indecision"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Base random seed");
  app.add_option("--config", flags.config, "Key-value config file")
      ->check(CLI::ExistingFile);
  app.add_option("--out", flags.out, "Output directory");
  app.add_option("--strict-variant", flags.strict_variant, "closed-form or process")
      ->check(CLI::IsMember({"closed-form", "process"}));
  app.add_option("--maxu-variant", flags.maxu_variant, "main-text or sum-form")
      ->check(CLI::IsMember({"main-text", "sum-form"}));
  app.add_option("--threads", flags.threads, "Worker threads (0 = auto)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate a population of agents");
  simulate->add_option("--voters", sim.voters, "Number of voters");
  simulate->add_option("--queries", sim.queries, "Queries per voter");
  simulate->add_option("--agents", sim.agents, "Kind mix, e.g. min-delta:0.5,max-u:0.5");
  simulate->add_option("--mode", sim.mode, "indecisive or strict")
      ->check(CLI::IsMember({"indecisive", "strict"}));
  simulate->add_flag("--shared-queries", sim.shared_queries,
                     "Every voter answers the same question list");
  simulate->add_option("--query-seed", sim.query_seed,
                       "Seed of the shared question list (default: --seed)");
  simulate->add_option("--output", sim.output, "File name inside --out");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit one model to a dataset");
  fit_cmd->add_option("--data", fit.data, "Training CSV")->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("--test", fit.test, "Optional test CSV")->check(CLI::ExistingFile);
  fit_cmd->add_option("--model", fit.model, "Model kind or 'mixture'");
  fit_cmd->add_option("--budget", fit.budget, "Candidate budget");
  fit_cmd->add_option("--k", fit.k, "Mixture components");
  fit_cmd->add_option("--output", fit.output, "File name inside --out");

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Run a train/test evaluation");
  evaluate->add_option("--data", ev.data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--paradigm", ev.paradigm,
                       "individual, representatives or population")
      ->check(CLI::IsMember({"individual", "representatives", "population"}));
  evaluate->add_option("--train-voters", ev.train_voters, "Training voters (group)");

  HypothesisArgs hyp;
  auto* hypothesis = app.add_subcommand("hypothesis-test", "Vote-count chi-squared tests");
  hypothesis->add_option("--indecisive", hyp.indecisive, "Indecisive-group CSV")
      ->check(CLI::ExistingFile);
  hypothesis->add_option("--strict", hyp.strict, "Strict-group CSV")
      ->check(CLI::ExistingFile);
  hypothesis->add_option("--counts", hyp.counts,
                         "majority minority flips strict_majority strict_minority")
      ->expected(5);
  hypothesis->add_option("--alpha", hyp.alpha, "Significance level");
  hypothesis->add_flag("--continuity", hyp.continuity, "Yates continuity correction");

  EquivalenceArgs eq;
  auto* equivalence =
      app.add_subcommand("equivalence-check", "Score/response-function equivalence");
  equivalence->add_option("--trials", eq.trials, "Draws per kind");
  equivalence->add_option("--tolerance", eq.tolerance, "Comparison tolerance");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Render stored fit results");
  report->add_option("--results", rep.results, "Fit JSON")->required()->check(CLI::ExistingFile);
  report->add_option("--output", rep.output, "File name inside --out");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("indecision");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitValidation;
  }

  try {
    const RunConfig config = resolve_config(flags);
    if (simulate->parsed()) return run_simulate(config, sim, out);
    if (fit_cmd->parsed()) return run_fit(config, fit, out, err);
    if (evaluate->parsed()) return run_evaluate(config, ev, out, err);
    if (hypothesis->parsed()) return run_hypothesis(config, hyp, out, err);
    if (equivalence->parsed()) return run_equivalence(config, eq, out);
    if (report->parsed()) return run_report(config, rep, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitValidation;
}

}  // namespace indecision::cli

#endif  // INDECISION_TOOLS_CLI_APP_HPP_
