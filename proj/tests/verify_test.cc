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

#include "qgenocchi/verify.h"

#include <algorithm>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "qgenocchi/config.h"

namespace qgen {
namespace {

GridSpec Point(int n_lo, int n_hi, std::vector<const char*> qs) {
  GridSpec grid = GridSpec::Default();
  grid.n = {n_lo, n_hi};
  grid.alpha = {1, 1};
  grid.beta = {1, 1};
  grid.q.clear();
  for (const char* q : qs) grid.q.push_back(Rat::Parse(q));
  return grid;
}

TEST(RegistryTest, FifteenIdentitiesRoundTrip) {
  const auto& all = AllIdentities();
  EXPECT_EQ(all.size(), 15u);
  std::set<std::string> names;
  for (IdentityId id : all) {
    const std::string name = IdentityName(id);
    EXPECT_TRUE(names.insert(name).second) << name;
    EXPECT_EQ(ParseIdentity(name), id);
    EXPECT_STRNE(IdentityDescription(id), "");
  }
  for (const char* expected :
       {"EQ18_RECURRENCE", "T1_UMBRAL", "T2_REFLECTION", "T3_UMBRAL_REC",
        "T4_VALUE_AT_TWO", "T5_INTEGRAL_REFLECT", "C1_INTEGRAL",
        "EQ10_SYMMETRY", "T6_MOMENT", "T7_PRODUCT", "T8_SFOLD",
        "C2_PRODUCT_EXPANSION", "C3_SFOLD_EXPANSION", "EQ3_CLOSED_VS_SERIES",
        "EQ1_PADIC_CONVERGENCE"}) {
    EXPECT_EQ(names.count(expected), 1u) << expected;
  }
  EXPECT_THROW(ParseIdentity("T9_UNKNOWN"), std::invalid_argument);
}

TEST(RegistryTest, VariantsOnlyWhereDiscrepanciesLive) {
  const std::set<std::string> with_variants = {
      "T4_VALUE_AT_TWO", "C1_INTEGRAL", "T6_MOMENT", "T7_PRODUCT",
      "T8_SFOLD", "C2_PRODUCT_EXPANSION", "C3_SFOLD_EXPANSION"};
  for (IdentityId id : AllIdentities()) {
    EXPECT_EQ(HasVariants(id), with_variants.count(IdentityName(id)) == 1)
        << IdentityName(id);
  }
  EXPECT_STREQ(VariantTagName(VariantTag::kNone), "n/a");
  EXPECT_STREQ(VariantTagName(ToTag(Variant::kPrinted)), "printed");
  EXPECT_STREQ(VariantTagName(ToTag(Variant::kCorrected)), "corrected");
}

TEST(RunIdentityTest, ReflectionPasses) {
  GridSpec grid = Point(0, 4, {"2", "1/2"});
  grid.x = {0, 1};
  const auto reports = RunIdentity(IdentityId::kT2Reflection, grid);
  EXPECT_EQ(reports.size(), 5u * 2u * 2u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.verdict, Verdict::kPass) << r.PointString();
    EXPECT_EQ(r.lhs, r.rhs);
    EXPECT_EQ(r.variant, VariantTag::kNone);
  }
}

TEST(RunIdentityTest, ValueAtTwoPrintedFails) {
  const auto reports =
      RunIdentity(IdentityId::kT4ValueAtTwo, Point(2, 2, {"2"}),
                  Variant::kPrinted);
  ASSERT_EQ(reports.size(), 1u);
  const auto& r = reports[0];
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.variant, VariantTag::kPrinted);
  EXPECT_EQ(r.lhs, "5");
  EXPECT_EQ(r.rhs, "11/2");
  EXPECT_EQ(r.difference, "-1/2");
  EXPECT_EQ(r.PointString(), "n=2 alpha=1 beta=1 q=2");
}

TEST(RunIdentityTest, ValueAtTwoSkipsSmallN) {
  const auto reports =
      RunIdentity(IdentityId::kT4ValueAtTwo, Point(0, 3, {"2"}),
                  Variant::kCorrected);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].verdict, Verdict::kSkipped);
  EXPECT_EQ(reports[1].verdict, Verdict::kSkipped);
  EXPECT_NE(reports[1].reason.find("needs n > 1"), std::string::npos);
  EXPECT_EQ(reports[2].verdict, Verdict::kPass);
  EXPECT_EQ(reports[3].verdict, Verdict::kPass);
}

TEST(RunIdentityTest, CorollaryOneCorrectedPasses) {
  const auto reports = RunIdentity(IdentityId::kC1Integral,
                                   Point(1, 1, {"2"}), Variant::kCorrected);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].verdict, Verdict::kPass);
  EXPECT_EQ(reports[0].lhs, "2");
  EXPECT_EQ(reports[0].rhs, "2");
  const auto printed = RunIdentity(IdentityId::kC1Integral,
                                   Point(1, 1, {"2"}), Variant::kPrinted);
  ASSERT_EQ(printed.size(), 1u);
  EXPECT_EQ(printed[0].verdict, Verdict::kFail);
  EXPECT_EQ(printed[0].rhs, "5/2");
}

TEST(RunIdentityTest, BothVariantsWhenUnspecified) {
  const auto reports =
      RunIdentity(IdentityId::kT4ValueAtTwo, Point(2, 2, {"2"}));
  ASSERT_EQ(reports.size(), 2u);
  std::set<VariantTag> tags;
  for (const auto& r : reports) tags.insert(r.variant);
  EXPECT_EQ(tags.size(), 2u);
}

TEST(RunIdentityTest, EmptyGridIsAnError) {
  GridSpec grid = Point(0, 3, {"2"});
  grid.n = {4, 3};
  EXPECT_THROW(RunIdentity(IdentityId::kT1Umbral, grid), std::invalid_argument);
}

TEST(RunIdentityTest, SerialAndParallelAgree) {
  GridSpec grid = GridSpec::Default();
  grid.n = {0, 5};
  for (IdentityId id : {IdentityId::kT1Umbral, IdentityId::kT6Moment,
                        IdentityId::kEq3ClosedVsSeries}) {
    const auto a = RunIdentity(id, grid, std::nullopt, Execution::kSerial);
    const auto b = RunIdentity(id, grid, std::nullopt, Execution::kParallel);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].PointString(), b[i].PointString());
      EXPECT_EQ(a[i].lhs, b[i].lhs);
      EXPECT_EQ(a[i].rhs, b[i].rhs);
      EXPECT_EQ(a[i].verdict, b[i].verdict);
    }
  }
}

TEST(RunIdentityTest, SeriesRecordsBounds) {
  GridSpec grid = GridSpec::Default();
  grid.series_n = {1, 2};
  grid.series_x = {0, 0};
  grid.series_q = {Rat::Parse("1/2")};
  grid.alpha = {1, 1};
  grid.beta = {1, 1};
  const auto reports = RunIdentity(IdentityId::kEq3ClosedVsSeries, grid);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.verdict, Verdict::kPass);
    EXPECT_NE(r.detail.find("bound="), std::string::npos);
  }
  EXPECT_EQ(reports[0].lhs, "3/4");
}

TEST(RunIdentityTest, PadicReportsTrace) {
  GridSpec grid = GridSpec::Default();
  grid.padic = {PadicSample{3, Rat(4)}};
  grid.padic_alpha = {1, 1};
  grid.padic_beta = {1, 1};
  const auto reports = RunIdentity(IdentityId::kEq1PadicConvergence, grid);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_EQ(r.verdict, Verdict::kPass) << r.PointString() << " " << r.lhs;
  }
  EXPECT_EQ(reports[0].lhs, "inf,inf,inf,inf,inf");
  EXPECT_EQ(reports[0].rhs, "1");
}

TEST(RunAllTest, EqualWeightsStillFailValueAtTwo) {
  const GridSpec grid = ParseConfig("equal_weights = true\nn = 0..4\n");
  RunOptions options;
  options.identity = IdentityId::kT4ValueAtTwo;
  options.variant = Variant::kPrinted;
  const RunResult result = RunAll(grid, options);
  ASSERT_EQ(result.summaries.size(), 1u);
  EXPECT_GT(result.summaries[0].fail, 0);
  ASSERT_TRUE(result.summaries[0].first_counterexample.has_value());
  for (const auto& r : result.reports) {
    const auto alpha = std::find_if(r.point.begin(), r.point.end(),
                                    [](const Coord& c) { return c.key == "alpha"; });
    const auto beta = std::find_if(r.point.begin(), r.point.end(),
                                   [](const Coord& c) { return c.key == "beta"; });
    ASSERT_NE(alpha, r.point.end());
    ASSERT_NE(beta, r.point.end());
    EXPECT_EQ(std::get<int64_t>(alpha->value), std::get<int64_t>(beta->value));
  }
  EXPECT_EQ(ExitStatus(result, false), 0);
  EXPECT_EQ(ExitStatus(result, true), 1);
}

TEST(RunAllTest, CorrectedFailureFailsRun) {
  RunResult result;
  IdentityReport r;
  r.identity = IdentityId::kT6Moment;
  r.variant = VariantTag::kCorrected;
  r.verdict = Verdict::kFail;
  result.reports.push_back(r);
  result.summaries = Summarize(result.reports);
  EXPECT_EQ(ExitStatus(result, false), 1);
}

TEST(RunAllTest, VacuousRunIsNonzero) {
  GridSpec grid = GridSpec::Default();
  grid.n = {5, 4};
  RunOptions options;
  options.identity = IdentityId::kT1Umbral;
  const RunResult result = RunAll(grid, options);
  ASSERT_EQ(result.reports.size(), 1u);
  EXPECT_EQ(result.reports[0].verdict, Verdict::kSkipped);
  EXPECT_EQ(result.reports[0].reason.rfind("empty grid", 0), 0u);
  EXPECT_EQ(ExitStatus(result, false), 2);
}

TEST(RunAllTest, AllSkippedIsNonzero) {
  // n = 0..1 leaves Theorem 4 with nothing inside its hypothesis.
  GridSpec grid = Point(0, 1, {"2"});
  RunOptions options;
  options.identity = IdentityId::kT4ValueAtTwo;
  const RunResult result = RunAll(grid, options);
  ASSERT_FALSE(result.reports.empty());
  for (const auto& r : result.reports) EXPECT_EQ(r.verdict, Verdict::kSkipped);
  EXPECT_EQ(ExitStatus(result, false), 2);
}

TEST(SummarizeTest, CountsPerIdentityAndVariant) {
  const auto reports =
      RunIdentity(IdentityId::kT4ValueAtTwo, Point(0, 3, {"2", "3"}));
  const auto summaries = Summarize(reports);
  ASSERT_EQ(summaries.size(), 2u);
  int total = 0;
  for (const auto& s : summaries) {
    EXPECT_EQ(s.skipped, 4);
    total += s.pass + s.fail + s.skipped;
    if (s.variant == VariantTag::kCorrected) {
      EXPECT_EQ(s.fail, 0);
      EXPECT_FALSE(s.first_counterexample.has_value());
    } else {
      EXPECT_EQ(s.fail, 4);
      ASSERT_TRUE(s.first_counterexample.has_value());
      EXPECT_EQ(s.first_counterexample->PointString(), "n=2 alpha=1 beta=1 q=2");
    }
  }
  EXPECT_EQ(total, static_cast<int>(reports.size()));
}

}  // namespace
}  // namespace qgen
