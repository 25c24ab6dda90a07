// Copyright 2026 The qgenocchi Authors.
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

#include "qgenocchi/config.h"

#include <string>

#include "gtest/gtest.h"

namespace qgen {
namespace {

TEST(ConfigTest, EmptyTextGivesDefaults) {
  const GridSpec grid = ParseConfig("# nothing\n\n");
  const GridSpec def = GridSpec::Default();
  EXPECT_EQ(grid.n.lo, def.n.lo);
  EXPECT_EQ(grid.n.hi, def.n.hi);
  EXPECT_EQ(grid.q.size(), 6u);
  EXPECT_EQ(grid.padic.size(), 3u);
}

TEST(ConfigTest, ParsesAxes) {
  const GridSpec grid = ParseConfig(
      "n = 1..4   # comment\n"
      "x = 2\n"
      "q = 2, 1/3, -5/2\n"
      "equal_weights = true\n"
      "factors = 2\n"
      "series_tol = 1e-10\n"
      "padic = 3:4, 5:11\n"
      "padic_levels = 3\n");
  EXPECT_EQ(grid.n.lo, 1);
  EXPECT_EQ(grid.n.hi, 4);
  EXPECT_EQ(grid.x.lo, 2);
  EXPECT_EQ(grid.x.hi, 2);
  ASSERT_EQ(grid.q.size(), 3u);
  EXPECT_EQ(grid.q[1], Rat::Parse("1/3"));
  EXPECT_EQ(grid.q[2], Rat::Parse("-5/2"));
  EXPECT_TRUE(grid.equal_weights);
  EXPECT_EQ(grid.max_factors, 2);
  EXPECT_DOUBLE_EQ(grid.series_tol, 1e-10);
  ASSERT_EQ(grid.padic.size(), 2u);
  EXPECT_EQ(grid.padic[1].p, 5);
  EXPECT_EQ(grid.padic[1].q, Rat(11));
  EXPECT_EQ(grid.padic_levels, 3);
}

int ErrorLine(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

TEST(ConfigTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ErrorLine("n = 1..2\nbogus = 3\n"), 2);
  EXPECT_EQ(ErrorLine("n = 1..2\n\nn = 3\n"), 3);
  EXPECT_EQ(ErrorLine("q =\n"), 1);
  EXPECT_EQ(ErrorLine("just text\n"), 1);
  EXPECT_EQ(ErrorLine("x = 0\nq = 1\n"), 2);
  EXPECT_EQ(ErrorLine("alpha = 0..2\n"), 1);
  EXPECT_EQ(ErrorLine("padic = 3:5\n"), 1);
  EXPECT_EQ(ErrorLine("series_q = 3/2\n"), 1);
  EXPECT_EQ(ErrorLine("n = 1..x\n"), 1);
  try {
    ParseConfig("\nbogus = 1\n");
  } catch (const ConfigError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("config line 2:", 0), 0u) << e.what();
  }
}

TEST(ConfigTest, MissingFileIsAnError) {
  EXPECT_ANY_THROW(LoadConfigFile("/nonexistent/qgenocchi.conf"));
}

}  // namespace
}  // namespace qgen
