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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"

namespace indecision {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("indecision_cli_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string out(const std::string& sub) const { return (dir_ / sub).string(); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitValidation);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"simulate", "--voters", "0", "--out", out("a")}).code, cli::kExitValidation);
  EXPECT_EQ(run({"fit", "--data", out("missing.csv"), "--model", "logit"}).code,
            cli::kExitValidation);
  EXPECT_EQ(run({"--config", out("missing.cfg"), "simulate"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, EquivalenceCheck) {
  const Invocation r = run({"equivalence-check", "--trials", "10000", "--seed", "7", "--out", out("eq")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "eq" / "equivalence.json"));
}

TEST_F(CliTest, HypothesisFromCounts) {
  const Invocation r = run({"hypothesis-test", "--counts", "581", "74", "275", "751", "149", "--out",
                     out("h")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json j = Json::parse(slurp(dir_ / "h" / "hypothesis.json"));
  EXPECT_NEAR(j["h0_1"]["statistic"].get<double>(), 8.53140928828622, 1e-9);
  EXPECT_TRUE(j["h0_2"]["rejected"].get<bool>());
}

TEST_F(CliTest, SimulateIsDeterministicAcrossThreads) {
  std::vector<std::string> snapshots;
  for (const char* threads : {"1", "4", "4"}) {
    const std::string d = out(std::string("sim") + threads + std::to_string(snapshots.size()));
    const Invocation r = run({"simulate", "--voters", "5", "--queries", "10", "--seed", "11",
                       "--threads", threads, "--out", d});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    snapshots.push_back(slurp(fs::path(d) / "dataset.csv"));
  }
  EXPECT_EQ(snapshots[0], snapshots[1]);
  EXPECT_EQ(snapshots[1], snapshots[2]);
  EXPECT_EQ(std::count(snapshots[0].begin(), snapshots[0].end(), '\n'), 51);
}

TEST_F(CliTest, FitAndReportRoundTrip) {
  ASSERT_EQ(run({"simulate", "--voters", "4", "--queries", "30", "--seed", "3", "--out",
                 out("d")})
                .code,
            cli::kExitOk);
  const std::string data = out("d") + "/dataset.csv";
  std::vector<std::string> fits;
  for (const char* threads : {"1", "4"}) {
    const Invocation r = run({"fit", "--data", data, "--model", "min-delta", "--budget", "200",
                       "--seed", "5", "--threads", threads, "--out", out("f"), "--output",
                       std::string("fit") + threads + ".json"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    fits.push_back(slurp(dir_ / "f" / (std::string("fit") + threads + ".json")));
  }
  EXPECT_EQ(fits[0], fits[1]);
  const auto saved = load_results((dir_ / "f" / "fit1.json").string());
  ASSERT_EQ(saved.size(), 1u);
  const FitResult& fit = saved[0].fit;
  EXPECT_EQ(fit.single().kind, ModelKind::kMinDelta);
  EXPECT_EQ(fit.budget, 200u);

  const Invocation ev = run({"evaluate", "--data", data, "--paradigm", "population",
                      "--train-voters", "2", "--seed", "1", "--out", out("e")});
  ASSERT_EQ(ev.code, cli::kExitOk) << ev.err;
  const Invocation rep = run({"report", "--results", out("e") + "/fits.json", "--out", out("r")});
  ASSERT_EQ(rep.code, cli::kExitOk) << rep.err;
  const std::string csv = slurp(dir_ / "r" / "results.csv");
  EXPECT_EQ(csv.rfind("name,model_kind,train_ll,test_ll,budget,seed,candidate_index\n", 0), 0u);
}

TEST_F(CliTest, StrictDatasetRejectedForIndecisiveMode) {
  ASSERT_EQ(run({"simulate", "--voters", "2", "--queries", "5", "--mode", "strict", "--out",
                 out("s")})
                .code,
            cli::kExitOk);
  const Invocation r = run({"fit", "--data", out("s") + "/dataset.csv", "--model", "logit", "--budget",
                     "10", "--config", out("mode.cfg"), "--out", out("f")});
  // mode.cfg does not exist yet.
  EXPECT_EQ(r.code, cli::kExitValidation);
  std::ofstream(out("mode.cfg")) << "mode = indecisive\n";
  const Invocation r2 = run({"fit", "--data", out("s") + "/dataset.csv", "--model", "logit",
                      "--budget", "10", "--config", out("mode.cfg"), "--out", out("f")});
  EXPECT_EQ(r2.code, cli::kExitValidation) << r2.err;
}

}  // namespace
}  // namespace indecision
