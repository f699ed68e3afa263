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


#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "indecision/config.hpp"

namespace indecision {
namespace {

RunConfig parse(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  read_config(in, config);
  return config;
}

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_NO_THROW(check_config(c));
  EXPECT_EQ(c.kinds.size(), 8u);
  EXPECT_EQ(c.mixture_k, 2u);
  EXPECT_FALSE(c.mode);
}

TEST(Config, ParsesEntries) {
  const RunConfig c = parse(
      "# comment\n"
      "\n"
      "seed = 42\n"
      "mode = strict   # trailing comment\n"
      "kinds = min-delta, logit\n"
      "budget.mixture = 123\n"
      "lambda.difference = 0 1.5\n"
      "q = 0.1 0.9\n"
      "features.age = 20 80\n"
      "split.paradigm = representatives\n"
      "split.train_voters = 6\n"
      "strict_variant = process\n");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.mode, DatasetMode::kStrict);
  EXPECT_EQ(c.kinds, (std::vector<ModelKind>{ModelKind::kMinDelta, ModelKind::kLogit}));
  EXPECT_EQ(c.budgets.mixture, 123u);
  EXPECT_EQ(c.space.difference_lambda.hi, 1.5);
  EXPECT_EQ(c.space.q_bounds.lo, 0.1);
  EXPECT_EQ(c.features.age.hi, 80);
  EXPECT_EQ(c.split.paradigm, Paradigm::kRepresentatives);
  EXPECT_EQ(c.split.train_voter_count, 6u);
  EXPECT_EQ(c.strict_variant, StrictVariant::kProcess);
}

TEST(Config, ErrorsNameTheLine) {
  try {
    parse("seed = 1\nbogus = 2\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(Config, Rejections) {
  EXPECT_THROW(parse("budget.group_single = 0\n"), ValidationError);
  EXPECT_THROW(parse("seed = -1\n"), ValidationError);
  EXPECT_THROW(parse("seed\n"), ValidationError);
  EXPECT_THROW(parse("weights = 1\n"), ValidationError);
  EXPECT_THROW(parse("features.age = 20.5 70\n"), ValidationError);
  EXPECT_THROW(parse("kinds = \n"), ValidationError);
  EXPECT_THROW(parse("mixture_k = 0\n"), ValidationError);
  EXPECT_THROW(parse("lambda.level = 2 -2\n"), ValidationError);
}

TEST(Config, MissingFile) {
  EXPECT_THROW(load_config("/nonexistent/indecision.cfg"), ValidationError);
}

}  // namespace
}  // namespace indecision
