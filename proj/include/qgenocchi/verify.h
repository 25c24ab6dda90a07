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

#ifndef QGENOCCHI_VERIFY_H_
#define QGENOCCHI_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgenocchi/genocchi.h"
#include "qgenocchi/parallel.h"
#include "qgenocchi/rational.h"

namespace qgen {

enum class IdentityId {
  kEq18Recurrence,
  kT1Umbral,
  kT2Reflection,
  kT3UmbralRec,
  kT4ValueAtTwo,
  kT5IntegralReflect,
  kC1Integral,
  kEq10Symmetry,
  kT6Moment,
  kT7Product,
  kT8Sfold,
  kC2ProductExpansion,
  kC3SfoldExpansion,
  kEq3ClosedVsSeries,
  kEq1PadicConvergence,
};

// kNone renders as "n/a" and is used by identities without a printed form
// that differs from the corrected one.
enum class VariantTag { kNone, kPrinted, kCorrected };

const std::vector<IdentityId>& AllIdentities();
const char* IdentityName(IdentityId id);
// Throws std::invalid_argument for unknown names.
IdentityId ParseIdentity(const std::string& name);
const char* IdentityDescription(IdentityId id);
bool HasVariants(IdentityId id);

const char* VariantTagName(VariantTag tag);
VariantTag ToTag(Variant v);

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  std::vector<int> Values() const;
};

struct PadicSample {
  int64_t p = 3;
  Rat q;
};

struct GridSpec {
  IntRange n{0, 8};
  IntRange k{0, 2};
  IntRange x{-2, 3};
  IntRange alpha{1, 3};
  IntRange beta{1, 3};
  IntRange degree{0, 4};
  int max_factors = 3;
  std::vector<Rat> q;
  bool equal_weights = false;

  IntRange series_n{1, 5};
  IntRange series_x{0, 2};
  std::vector<Rat> series_q;
  double series_tol = 1e-12;
  double series_slack = 1e-9;

  std::vector<PadicSample> padic;
  IntRange padic_alpha{1, 2};
  IntRange padic_beta{1, 2};
  int padic_levels = 0;  // 0: per-prime default

  // The default verification grid.
  static GridSpec Default();
  // Throws std::invalid_argument naming the offending axis.
  void Validate() const;
};

enum class Verdict { kPass, kFail, kSkipped };
const char* VerdictName(Verdict v);

struct Coord {
  std::string key;
  std::variant<int64_t, std::string, std::vector<int>> value;
};

struct IdentityReport {
  IdentityId identity = IdentityId::kEq18Recurrence;
  VariantTag variant = VariantTag::kNone;
  std::vector<Coord> point;
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::kSkipped;
  std::string difference;  // FAIL only: lhs - rhs
  std::string reason;      // SKIPPED only: the violated guard
  std::string detail;      // series bounds, valuation criterion

  // "n=2 x=0 alpha=1 beta=1 q=2"
  std::string PointString() const;
};

// Runs one identity over `grid`. With no variant, variant-bearing
// identities run printed then corrected; variant-free ones ignore it.
// Reports are ordered by variant, then lexicographically over the grid
// axes; the serial and parallel paths return identical lists.
// Throws std::invalid_argument when the grid yields no points at all.
std::vector<IdentityReport> RunIdentity(
    IdentityId id, const GridSpec& grid,
    std::optional<Variant> variant = std::nullopt,
    Execution exec = Execution::kParallel);

struct IdentitySummary {
  IdentityId identity = IdentityId::kEq18Recurrence;
  VariantTag variant = VariantTag::kNone;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::optional<IdentityReport> first_counterexample;
};

struct RunResult {
  std::vector<IdentityReport> reports;
  std::vector<IdentitySummary> summaries;
};

struct RunOptions {
  std::optional<IdentityId> identity;
  std::optional<Variant> variant;
  Execution exec = Execution::kParallel;
};

// Runs every selected identity on `grid`. An identity whose grid is empty
// contributes one SKIPPED report instead of aborting the run.
RunResult RunAll(const GridSpec& grid, const RunOptions& options = {});

std::vector<IdentitySummary> Summarize(
    const std::vector<IdentityReport>& reports);

// 0: every non-printed identity passed; 1: a FAIL outside the printed
// variants (or any FAIL with strict_printed); 2: nothing was evaluated.
int ExitStatus(const RunResult& result, bool strict_printed);

}  // namespace qgen

#endif  // QGENOCCHI_VERIFY_H_
