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

#include "qgenocchi/emit.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace qgen {
namespace {

RunResult SinglePass() {
  IdentityReport r;
  r.identity = IdentityId::kT2Reflection;
  r.point = {Coord{"n", int64_t{0}}, Coord{"x", int64_t{0}},
             Coord{"q", std::string("2")}};
  r.lhs = "3/4";
  r.rhs = "3/4";
  r.verdict = Verdict::kPass;
  RunResult result;
  result.reports.push_back(r);
  result.summaries = Summarize(result.reports);
  return result;
}

RunResult Mixed() {
  GridSpec grid = GridSpec::Default();
  grid.n = {1, 2};
  grid.alpha = {1, 1};
  grid.beta = {1, 1};
  grid.q = {Rat(2)};
  RunOptions options;
  options.identity = IdentityId::kT4ValueAtTwo;
  return RunAll(grid, options);
}

TEST(EmitTest, JsonSchemaForPass) {
  const auto j = nlohmann::json::parse(
      RenderReports(SinglePass(), ReportFormat::kJson));
  const auto& r = j.at("reports").at(0);
  EXPECT_EQ(r.at("identity"), "T2_REFLECTION");
  EXPECT_EQ(r.at("variant"), "n/a");
  EXPECT_EQ(r.at("point").at("q"), "2");
  EXPECT_EQ(r.at("point").at("n"), 0);
  EXPECT_EQ(r.at("lhs"), "3/4");
  EXPECT_EQ(r.at("rhs"), "3/4");
  EXPECT_EQ(r.at("verdict"), "PASS");
  EXPECT_FALSE(r.contains("difference"));
  EXPECT_EQ(j.at("summary").at(0).at("pass"), 1);
}

TEST(EmitTest, JsonCarriesFailuresAndSkips) {
  const auto j =
      nlohmann::json::parse(RenderReports(Mixed(), ReportFormat::kJson));
  bool saw_fail = false;
  bool saw_skip = false;
  for (const auto& r : j.at("reports")) {
    if (r.at("verdict") == "FAIL") {
      saw_fail = true;
      EXPECT_EQ(r.at("difference"), "-1/2");
    }
    if (r.at("verdict") == "SKIPPED") {
      saw_skip = true;
      EXPECT_TRUE(r.at("lhs").is_null());
      EXPECT_FALSE(r.at("reason").get<std::string>().empty());
    }
  }
  EXPECT_TRUE(saw_fail);
  EXPECT_TRUE(saw_skip);
}

TEST(EmitTest, CsvHeaderAndRows) {
  const std::string csv = RenderReports(Mixed(), ReportFormat::kCsv);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "identity,variant,point,lhs,rhs,verdict,difference");
  EXPECT_NE(csv.find("T4_VALUE_AT_TWO,printed,n=2;alpha=1;beta=1;q=2,5,11/2,"
                     "FAIL,-1/2\n"),
            std::string::npos);
  EXPECT_NE(csv.find("SKIPPED("), std::string::npos);
}

TEST(EmitTest, MarkdownSummaryTable) {
  const std::string md = RenderReports(Mixed(), ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| identity | variant | pass | fail | skipped |"),
            std::string::npos);
  EXPECT_NE(md.find("| T4_VALUE_AT_TWO | printed | 0 | 1 | 1 |"),
            std::string::npos);
  EXPECT_NE(md.find("| T4_VALUE_AT_TWO | corrected | 1 | 0 | 1 |"),
            std::string::npos);
  EXPECT_NE(md.find("First counterexamples"), std::string::npos);
}

TEST(EmitTest, RenderingIsStable) {
  for (auto f : {ReportFormat::kJson, ReportFormat::kCsv,
                 ReportFormat::kMarkdown}) {
    EXPECT_EQ(RenderReports(Mixed(), f), RenderReports(Mixed(), f));
  }
}

TEST(EmitTest, Errors) {
  EXPECT_THROW(RenderReports(RunResult{}, ReportFormat::kJson),
               std::invalid_argument);
  EXPECT_THROW(ParseReportFormat("yaml"), std::invalid_argument);
  EXPECT_THROW(EmitReports(SinglePass(), ReportFormat::kCsv,
                           "/nonexistent-dir/out.csv"),
               std::runtime_error);
}

TEST(EmitTest, WritesFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "qgenocchi_emit_test.json";
  EmitReports(SinglePass(), ReportFormat::kJson, path.string());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), RenderReports(SinglePass(), ReportFormat::kJson));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace qgen
