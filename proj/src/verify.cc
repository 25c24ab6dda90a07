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

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qgenocchi/bernstein.h"
#include "qgenocchi/padic.h"
#include "qgenocchi/qnum.h"

namespace qgen {
namespace {

struct IdentityInfo {
  IdentityId id;
  const char* name;
  const char* description;
  bool variants;
};

constexpr IdentityInfo kRegistry[] = {
    {IdentityId::kEq18Recurrence, "EQ18_RECURRENCE",
     "g_0 = 0 and g_n(1) + g_n = [2]_{q^beta} (n = 1) or 0 (n > 1)", false},
    {IdentityId::kT1Umbral, "T1_UMBRAL",
     "closed form g_n(x) equals the umbral expansion over g_0..g_n", false},
    {IdentityId::kT2Reflection, "T2_REFLECTION",
     "g_{n+1,1/q}(1-x) = (-1)^n q^{alpha n - beta} g_{n+1,q}(x)", false},
    {IdentityId::kT3UmbralRec, "T3_UMBRAL_REC",
     "q^{-alpha}(q^alpha g + 1)^n + g_n = [2]_{q^beta} (n = 1) or 0", false},
    {IdentityId::kT4ValueAtTwo, "T4_VALUE_AT_TWO",
     "g_n(2) = n [2]_{q^beta} + g_n / q^alpha (printed) or + g_n (corrected)",
     true},
    {IdentityId::kT5IntegralReflect, "T5_INTEGRAL_REFLECT",
     "(n+1) q^{-beta} I(q^{-beta xi} [1-xi]^n) = g_{n+1,1/q}(2)", false},
    {IdentityId::kC1Integral, "C1_INTEGRAL",
     "I(q^{-beta xi} [1-xi]^n) = [2]_{q^beta} + c g_{n+1,1/q} / (n+1)", true},
    {IdentityId::kEq10Symmetry, "EQ10_SYMMETRY",
     "B_{k,n}(x, q) = B_{n-k,n}(1-x, 1/q)", false},
    {IdentityId::kT6Moment, "T6_MOMENT",
     "single Bernstein moment against the Genocchi right-hand side", true},
    {IdentityId::kT7Product, "T7_PRODUCT",
     "two-factor Bernstein product moment, n_1 + n_2 > 2k", true},
    {IdentityId::kT8Sfold, "T8_SFOLD",
     "s-fold Bernstein product moment, sum n_i > s k", true},
    {IdentityId::kC2ProductExpansion, "C2_PRODUCT_EXPANSION",
     "two-factor Genocchi moment sum, without binomial prefactors", true},
    {IdentityId::kC3SfoldExpansion, "C3_SFOLD_EXPANSION",
     "s-fold Genocchi moment sum, without binomial prefactors", true},
    {IdentityId::kEq3ClosedVsSeries, "EQ3_CLOSED_VS_SERIES",
     "closed form against the alternating series in double precision", false},
    {IdentityId::kEq1PadicConvergence, "EQ1_PADIC_CONVERGENCE",
     "truncated fermionic sums converge p-adically to the closed forms",
     false},
};

const IdentityInfo& Info(IdentityId id) {
  for (const auto& info : kRegistry) {
    if (info.id == id) return info;
  }
  throw std::invalid_argument("unregistered identity");
}

class EmptyGridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  Verdict verdict = Verdict::kSkipped;
  std::string lhs;
  std::string rhs;
  std::string difference;
  std::string reason;
  std::string detail;
  std::string error;  // unexpected exception, rethrown after the loop
};

Outcome Compare(const Rat& lhs, const Rat& rhs) {
  Outcome out;
  out.lhs = lhs.ToString();
  out.rhs = rhs.ToString();
  if (lhs == rhs) {
    out.verdict = Verdict::kPass;
  } else {
    out.verdict = Verdict::kFail;
    out.difference = (lhs - rhs).ToString();
  }
  return out;
}

Outcome Compare(const std::pair<Rat, Rat>& sides) {
  return Compare(sides.first, sides.second);
}

Outcome Skip(std::string reason) {
  Outcome out;
  out.verdict = Verdict::kSkipped;
  out.reason = std::move(reason);
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Task {
  VariantTag variant = VariantTag::kNone;
  std::vector<Coord> point;
  std::function<Outcome()> eval;
};

// Genocchi tables shared read-only by the tasks of one run. Require() is
// called while tasks are built, Build() once, Get() from any thread.
class TableCache {
 public:
  void Require(const QPoint& q, Weights w, int order) {
    auto key = std::make_tuple(q.value().ToString(), w.alpha, w.beta);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      it = entries_.emplace(key, Entry{std::make_unique<GenocchiTable>(q, w),
                                       order})
               .first;
    }
    it->second.order = std::max(it->second.order, order);
  }

  void Build(Execution exec) {
    std::vector<Entry*> pending;
    for (auto& [key, entry] : entries_) pending.push_back(&entry);
    const int64_t count = static_cast<int64_t>(pending.size());
    if (exec == Execution::kSerial) {
      for (Entry* e : pending) e->table->ExtendTo(e->order);
      return;
    }
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < count; ++i) {
      pending[i]->table->ExtendTo(pending[i]->order);
    }
  }

  const GenocchiTable& Get(const QPoint& q, Weights w) const {
    return *entries_.at(std::make_tuple(q.value().ToString(), w.alpha, w.beta))
                .table;
  }

 private:
  struct Entry {
    std::unique_ptr<GenocchiTable> table;
    int order = 0;
  };
  std::map<std::tuple<std::string, int, int>, Entry> entries_;
};

Coord IntCoord(const char* key, int64_t v) { return Coord{key, v}; }
Coord TextCoord(const char* key, std::string v) {
  return Coord{key, std::move(v)};
}
Coord QCoord(const QPoint& q) { return TextCoord("q", q.value().ToString()); }

std::vector<Weights> WeightGrid(const IntRange& alpha, const IntRange& beta,
                                bool equal_only) {
  std::vector<Weights> out;
  for (int a : alpha.Values()) {
    for (int b : beta.Values()) {
      if (equal_only && a != b) continue;
      out.push_back(Weights::Make(a, b));
    }
  }
  return out;
}

std::vector<QPoint> QGrid(const std::vector<Rat>& values) {
  std::vector<QPoint> out;
  for (const Rat& q : values) out.emplace_back(q);
  return out;
}

// Non-decreasing tuples of length s drawn from `range`.
void DegreeTuples(const IntRange& range, int s, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == s) {
    out.push_back(prefix);
    return;
  }
  const int start = prefix.empty() ? range.lo : prefix.back();
  for (int d = start; d <= range.hi; ++d) {
    prefix.push_back(d);
    DegreeTuples(range, s, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> DegreeLists(const IntRange& range, int s_lo,
                                          int s_hi) {
  std::vector<std::vector<int>> out;
  for (int s = s_lo; s <= s_hi; ++s) {
    std::vector<int> prefix;
    DegreeTuples(range, s, prefix, out);
  }
  return out;
}

std::string InadmissibleReason(const BernsteinSpec& spec) {
  return "inadmissible: sum n_i = " + std::to_string(spec.DegreeSum()) +
         " <= s*k = " + std::to_string(spec.factors() * spec.k);
}

std::vector<IntegrandSpec> PadicBattery(Weights w) {
  std::vector<IntegrandSpec> out;
  out.push_back(IntegrandSpec::ConstantOne(w));
  for (int n = 0; n <= 4; ++n) {
    out.push_back(IntegrandSpec::GenocchiKernel(n, 0, w));
  }
  out.push_back(IntegrandSpec::GenocchiKernel(2, 1, w));
  for (int n = 1; n <= 3; ++n) {
    out.push_back(IntegrandSpec::ReflectedKernel(n, w));
  }
  out.push_back(IntegrandSpec::BernsteinProduct(0, {1, 1}, w));
  out.push_back(IntegrandSpec::BernsteinProduct(1, {1, 2}, w));
  out.push_back(IntegrandSpec::BernsteinProduct(1, {1, 1, 2}, w));
  return out;
}

enum class MomentForm { kIntegral, kBare };

// Shared builder for the single-degree, two-factor and s-fold moment
// identities.
void AddMomentTasks(const GridSpec& grid, Variant variant,
                    const std::vector<std::vector<int>>& degree_lists,
                    MomentForm form, bool single_degree, TableCache& cache,
                    std::vector<Task>& tasks) {
  const auto weights = WeightGrid(grid.alpha, grid.beta, grid.equal_weights);
  const auto qs = QGrid(grid.q);
  for (const auto& degrees : degree_lists) {
    for (int k : grid.k.Values()) {
      for (Weights w : weights) {
        for (const QPoint& q : qs) {
          Task t;
          t.variant = ToTag(variant);
          if (single_degree) {
            t.point.push_back(IntCoord("n", degrees.front()));
          } else {
            t.point.push_back(Coord{"degrees", degrees});
          }
          t.point.push_back(IntCoord("k", k));
          t.point.push_back(IntCoord("alpha", w.alpha));
          t.point.push_back(IntCoord("beta", w.beta));
          t.point.push_back(QCoord(q));

          const BernsteinSpec spec{k, degrees, w.alpha};
          if (!spec.Admissible()) {
            t.eval = [reason = InadmissibleReason(spec)] {
              return Skip(reason);
            };
            tasks.push_back(std::move(t));
            continue;
          }
          const QPoint qinv = q.Inverse();
          cache.Require(q, w, MomentOrder(spec));
          cache.Require(qinv, w, MomentOrder(spec));
          t.eval = [&cache, spec, q, qinv, w, variant, form] {
            const GenocchiTable& at_q = cache.Get(q, w);
            const GenocchiTable& at_qinv = cache.Get(qinv, w);
            if (form == MomentForm::kBare) {
              return Compare(
                  MomentExpansionBare(spec, at_q),
                  MomentTheoremRhs(spec, at_qinv, variant, Prefactor::kOmit));
            }
            return Compare(
                MomentIntegralExact(spec, at_q),
                MomentTheoremRhs(spec, at_qinv, variant, Prefactor::kInclude));
          };
          tasks.push_back(std::move(t));
        }
      }
    }
  }
}

void BuildTasks(IdentityId id, const GridSpec& grid,
                std::optional<Variant> variant_opt, TableCache& cache,
                std::vector<Task>& tasks) {
  const auto weights = WeightGrid(grid.alpha, grid.beta, grid.equal_weights);
  const auto qs = QGrid(grid.q);
  const Variant variant = variant_opt.value_or(Variant::kCorrected);
  const VariantTag tag =
      variant_opt ? ToTag(*variant_opt) : VariantTag::kNone;

  auto base = [&](std::vector<Coord> point) {
    Task t;
    t.variant = tag;
    t.point = std::move(point);
    return t;
  };

  switch (id) {
    case IdentityId::kEq18Recurrence:
      for (int n : grid.n.Values()) {
        for (Weights w : weights) {
          for (const QPoint& q : qs) {
            Task t = base({IntCoord("n", n), IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta), QCoord(q)});
            t.eval = [n, w, q] {
              if (n == 0) return Compare(GenocchiPoly(0, 0, w, q), Rat(0));
              return Compare(RecurrenceSides(n, w, q));
            };
            tasks.push_back(std::move(t));
          }
        }
      }
      break;

    case IdentityId::kT1Umbral:
      for (int n : grid.n.Values()) {
        for (int x : grid.x.Values()) {
          for (Weights w : weights) {
            for (const QPoint& q : qs) {
              Task t = base({IntCoord("n", n), IntCoord("x", x),
                             IntCoord("alpha", w.alpha),
                             IntCoord("beta", w.beta), QCoord(q)});
              cache.Require(q, w, n);
              t.eval = [n, x, w, q, &cache] {
                return Compare(GenocchiPoly(n, x, w, q),
                               GenocchiPolyUmbral(n, x, cache.Get(q, w)));
              };
              tasks.push_back(std::move(t));
            }
          }
        }
      }
      break;

    case IdentityId::kT2Reflection:
      for (int n : grid.n.Values()) {
        for (int x : grid.x.Values()) {
          for (Weights w : weights) {
            for (const QPoint& q : qs) {
              Task t = base({IntCoord("n", n), IntCoord("x", x),
                             IntCoord("alpha", w.alpha),
                             IntCoord("beta", w.beta), QCoord(q)});
              t.eval = [n, x, w, q] {
                return Compare(ReflectionSides(n, x, w, q));
              };
              tasks.push_back(std::move(t));
            }
          }
        }
      }
      break;

    case IdentityId::kT3UmbralRec:
      for (int n : grid.n.Values()) {
        for (Weights w : weights) {
          for (const QPoint& q : qs) {
            Task t = base({IntCoord("n", n), IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta), QCoord(q)});
            if (n == 0) {
              t.eval = [] { return Skip("recurrence is stated for n >= 1"); };
            } else {
              cache.Require(q, w, n);
              t.eval = [n, w, q, &cache] {
                return Compare(UmbralRecurrenceSides(n, cache.Get(q, w)));
              };
            }
            tasks.push_back(std::move(t));
          }
        }
      }
      break;

    case IdentityId::kT4ValueAtTwo:
      for (int n : grid.n.Values()) {
        for (Weights w : weights) {
          for (const QPoint& q : qs) {
            Task t = base({IntCoord("n", n), IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta), QCoord(q)});
            if (n <= 1) {
              t.eval = [] {
                return Skip("outside the value-at-two hypothesis (needs n > 1)");
              };
            } else {
              t.eval = [n, w, q, variant] {
                return Compare(ValueAtTwo(n, w, q, variant));
              };
            }
            tasks.push_back(std::move(t));
          }
        }
      }
      break;

    case IdentityId::kT5IntegralReflect:
      for (int n : grid.n.Values()) {
        for (Weights w : weights) {
          for (const QPoint& q : qs) {
            Task t = base({IntCoord("n", n), IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta), QCoord(q)});
            const BernsteinSpec spec{0, {n}, w.alpha};
            cache.Require(q, w, MomentOrder(spec));
            t.eval = [n, w, q, spec, &cache] {
              const Rat lhs = Rat(n + 1) * q.value().Pow(-w.beta) *
                              MomentIntegralExact(spec, cache.Get(q, w));
              return Compare(lhs, GenocchiPoly(n + 1, 2, w, q.Inverse()));
            };
            tasks.push_back(std::move(t));
          }
        }
      }
      break;

    case IdentityId::kC1Integral:
      for (int n : grid.n.Values()) {
        for (Weights w : weights) {
          for (const QPoint& q : qs) {
            Task t = base({IntCoord("n", n), IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta), QCoord(q)});
            if (n == 0) {
              t.eval = [] {
                return Skip("outside the value-at-two hypothesis (needs n >= 1)");
              };
              tasks.push_back(std::move(t));
              continue;
            }
            const BernsteinSpec spec{0, {n}, w.alpha};
            const QPoint qinv = q.Inverse();
            cache.Require(q, w, MomentOrder(spec));
            cache.Require(qinv, w, MomentOrder(spec));
            t.eval = [spec, w, q, qinv, variant, &cache] {
              return Compare(
                  MomentIntegralExact(spec, cache.Get(q, w)),
                  MomentTheoremRhs(spec, cache.Get(qinv, w), variant));
            };
            tasks.push_back(std::move(t));
          }
        }
      }
      break;

    case IdentityId::kEq10Symmetry:
      for (int n : grid.n.Values()) {
        for (int k = 0; k <= n; ++k) {
          for (int x : grid.x.Values()) {
            for (int alpha : grid.alpha.Values()) {
              for (const QPoint& q : qs) {
                Task t = base({IntCoord("n", n), IntCoord("k", k),
                               IntCoord("x", x), IntCoord("alpha", alpha),
                               QCoord(q)});
                t.eval = [k, n, alpha, x, q] {
                  return Compare(SymmetrySides(k, n, alpha, x, q));
                };
                tasks.push_back(std::move(t));
              }
            }
          }
        }
      }
      break;

    case IdentityId::kT6Moment:
      AddMomentTasks(grid, variant, DegreeLists(grid.degree, 1, 1),
                     MomentForm::kIntegral, true, cache, tasks);
      break;
    case IdentityId::kT7Product:
      AddMomentTasks(grid, variant, DegreeLists(grid.degree, 2, 2),
                     MomentForm::kIntegral, false, cache, tasks);
      break;
    case IdentityId::kT8Sfold:
      AddMomentTasks(grid, variant,
                     DegreeLists(grid.degree, 2, grid.max_factors),
                     MomentForm::kIntegral, false, cache, tasks);
      break;
    case IdentityId::kC2ProductExpansion:
      AddMomentTasks(grid, variant, DegreeLists(grid.degree, 2, 2),
                     MomentForm::kBare, false, cache, tasks);
      break;
    case IdentityId::kC3SfoldExpansion:
      AddMomentTasks(grid, variant,
                     DegreeLists(grid.degree, 2, grid.max_factors),
                     MomentForm::kBare, false, cache, tasks);
      break;

    case IdentityId::kEq3ClosedVsSeries: {
      const auto series_weights =
          WeightGrid(grid.alpha, grid.beta, grid.equal_weights);
      for (int n : grid.series_n.Values()) {
        for (int x : grid.series_x.Values()) {
          for (Weights w : series_weights) {
            for (const Rat& qv : grid.series_q) {
              Task t = base({IntCoord("n", n), IntCoord("x", x),
                             IntCoord("alpha", w.alpha),
                             IntCoord("beta", w.beta),
                             TextCoord("q", qv.ToString())});
              const double tol = grid.series_tol;
              const double slack = grid.series_slack;
              t.eval = [n, x, w, qv, tol, slack] {
                const Rat exact = GenocchiPoly(n, x, w, QPoint(qv));
                const SeriesApprox s =
                    GenocchiSeries(n, x, w, qv.ToDouble(), tol);
                const double diff = s.value - exact.ToDouble();
                Outcome out;
                out.lhs = exact.ToString();
                out.rhs = FormatDouble(s.value);
                out.detail = "terms=" + std::to_string(s.truncation_index) +
                             " bound=" + FormatDouble(s.error_bound) +
                             " slack=" + FormatDouble(slack);
                if (std::abs(diff) <= s.error_bound + slack) {
                  out.verdict = Verdict::kPass;
                } else {
                  out.verdict = Verdict::kFail;
                  out.difference = FormatDouble(-diff);
                }
                return out;
              };
              tasks.push_back(std::move(t));
            }
          }
        }
      }
      break;
    }

    case IdentityId::kEq1PadicConvergence: {
      const auto padic_weights =
          WeightGrid(grid.padic_alpha, grid.padic_beta, grid.equal_weights);
      for (const PadicSample& sample : grid.padic) {
        const PadicContext ctx(sample.p, sample.q, grid.padic_levels);
        for (Weights w : padic_weights) {
          for (const IntegrandSpec& f : PadicBattery(w)) {
            Task t = base({IntCoord("p", sample.p),
                           TextCoord("q", sample.q.ToString()),
                           IntCoord("alpha", w.alpha),
                           IntCoord("beta", w.beta),
                           TextCoord("integrand", f.Describe()),
                           IntCoord("levels", ctx.levels())});
            t.eval = [f, ctx] {
              const Rat reference = f.ExactIntegral(ctx.q());
              const ConvergenceProfile profile = ComputeConvergenceProfile(
                  f, ctx, reference, Execution::kSerial);
              Outcome out;
              out.lhs = profile.ValuationTrace();
              out.rhs = reference.ToString();
              out.detail =
                  "lhs lists v_p(I_N - exact) for N=1.." +
                  std::to_string(ctx.levels()) +
                  "; pass when non-decreasing with last > first, or all exact";
              out.verdict =
                  profile.Converging() ? Verdict::kPass : Verdict::kFail;
              if (out.verdict == Verdict::kFail) {
                out.difference = (profile.entries.back().partial_sum -
                                  reference)
                                     .ToString();
              }
              return out;
            };
            tasks.push_back(std::move(t));
          }
        }
      }
      break;
    }
  }
}

Outcome RunTask(const Task& task) {
  try {
    return task.eval();
  } catch (const GuardError& e) {
    return Skip(e.what());
  } catch (const std::exception& e) {
    Outcome out;
    out.error = e.what();
    return out;
  }
}

std::string RenderCoordValue(const Coord& c) {
  if (const auto* i = std::get_if<int64_t>(&c.value)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c.value)) return *s;
  const auto& list = std::get<std::vector<int>>(c.value);
  std::string out = "[";
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(list[i]);
  }
  return out + "]";
}

}  // namespace

const std::vector<IdentityId>& AllIdentities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> out;
    for (const auto& info : kRegistry) out.push_back(info.id);
    return out;
  }();
  return ids;
}

const char* IdentityName(IdentityId id) { return Info(id).name; }

IdentityId ParseIdentity(const std::string& name) {
  for (const auto& info : kRegistry) {
    if (name == info.name) return info.id;
  }
  throw std::invalid_argument("unknown identity '" + name + "'");
}

const char* IdentityDescription(IdentityId id) { return Info(id).description; }

bool HasVariants(IdentityId id) { return Info(id).variants; }

const char* VariantTagName(VariantTag tag) {
  switch (tag) {
    case VariantTag::kNone:
      return "n/a";
    case VariantTag::kPrinted:
      return "printed";
    case VariantTag::kCorrected:
      return "corrected";
  }
  return "?";
}

VariantTag ToTag(Variant v) {
  return v == Variant::kPrinted ? VariantTag::kPrinted : VariantTag::kCorrected;
}

std::vector<int> IntRange::Values() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

GridSpec GridSpec::Default() {
  GridSpec g;
  for (const char* q : {"2", "3", "1/2", "2/3", "-2", "5/3"}) {
    g.q.push_back(Rat::Parse(q));
  }
  g.series_q = {Rat::Parse("1/2"), Rat::Parse("9/10")};
  g.padic = {{3, Rat(4)}, {3, Rat(7)}, {5, Rat(6)}};
  return g;
}

void GridSpec::Validate() const {
  auto at_least = [](const IntRange& r, int min, const char* name) {
    if (!r.empty() && r.lo < min) {
      throw std::invalid_argument(std::string(name) + " must be >= " +
                                  std::to_string(min));
    }
  };
  at_least(n, 0, "n");
  at_least(k, 0, "k");
  at_least(alpha, 1, "alpha");
  at_least(beta, 1, "beta");
  at_least(degree, 0, "degree");
  at_least(series_n, 1, "series_n");
  at_least(padic_alpha, 1, "padic_alpha");
  at_least(padic_beta, 1, "padic_beta");
  if (max_factors < 2) throw std::invalid_argument("factors must be >= 2");
  for (const Rat& v : q) static_cast<void>(QPoint{v});
  for (const Rat& v : series_q) {
    if (!(v > Rat(0) && v < Rat(1))) {
      throw std::invalid_argument("series_q values must lie in (0, 1), got " +
                                  v.ToString());
    }
  }
  if (!(series_tol > 0)) throw std::invalid_argument("series_tol must be > 0");
  if (!(series_slack >= 0)) {
    throw std::invalid_argument("series_slack must be >= 0");
  }
  if (padic_levels < 0) throw std::invalid_argument("padic_levels must be >= 0");
  for (const auto& s : padic) {
    static_cast<void>(PadicContext(s.p, s.q, padic_levels));
  }
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

std::string IdentityReport::PointString() const {
  std::string out;
  for (size_t i = 0; i < point.size(); ++i) {
    if (i) out += " ";
    out += point[i].key + "=" + RenderCoordValue(point[i]);
  }
  return out;
}

std::vector<IdentityReport> RunIdentity(IdentityId id, const GridSpec& grid,
                                        std::optional<Variant> variant,
                                        Execution exec) {
  grid.Validate();
  std::vector<std::optional<Variant>> variants;
  if (!HasVariants(id)) {
    variants.push_back(std::nullopt);
  } else if (variant) {
    variants.push_back(*variant);
  } else {
    variants = {Variant::kPrinted, Variant::kCorrected};
  }

  TableCache cache;
  std::vector<Task> tasks;
  for (const auto& v : variants) BuildTasks(id, grid, v, cache, tasks);
  if (tasks.empty()) {
    throw EmptyGridError(std::string("empty grid for ") + IdentityName(id));
  }
  cache.Build(exec);

  const int64_t count = static_cast<int64_t>(tasks.size());
  std::vector<Outcome> outcomes(tasks.size());
  if (exec == Execution::kSerial) {
    for (int64_t i = 0; i < count; ++i) outcomes[i] = RunTask(tasks[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < count; ++i) outcomes[i] = RunTask(tasks[i]);
  }

  std::vector<IdentityReport> reports;
  reports.reserve(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    Outcome& o = outcomes[i];
    IdentityReport r;
    if (!o.error.empty()) {
      r.point = tasks[i].point;
      throw std::runtime_error(std::string(IdentityName(id)) + " at " +
                               r.PointString() + ": " + o.error);
    }
    r.identity = id;
    r.variant = tasks[i].variant;
    r.point = std::move(tasks[i].point);
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
    r.verdict = o.verdict;
    r.difference = std::move(o.difference);
    r.reason = std::move(o.reason);
    r.detail = std::move(o.detail);
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<IdentitySummary> Summarize(
    const std::vector<IdentityReport>& reports) {
  std::vector<IdentitySummary> out;
  for (const auto& r : reports) {
    IdentitySummary* s = nullptr;
    for (auto& existing : out) {
      if (existing.identity == r.identity && existing.variant == r.variant) {
        s = &existing;
        break;
      }
    }
    if (s == nullptr) {
      IdentitySummary fresh;
      fresh.identity = r.identity;
      fresh.variant = r.variant;
      out.push_back(std::move(fresh));
      s = &out.back();
    }
    switch (r.verdict) {
      case Verdict::kPass:
        ++s->pass;
        break;
      case Verdict::kFail:
        ++s->fail;
        if (!s->first_counterexample) s->first_counterexample = r;
        break;
      case Verdict::kSkipped:
        ++s->skipped;
        break;
    }
  }
  return out;
}

RunResult RunAll(const GridSpec& grid, const RunOptions& options) {
  grid.Validate();
  RunResult result;
  std::vector<IdentityId> ids;
  if (options.identity) {
    ids.push_back(*options.identity);
  } else {
    ids = AllIdentities();
  }
  for (IdentityId id : ids) {
    try {
      auto reports = RunIdentity(id, grid, options.variant, options.exec);
      for (auto& r : reports) result.reports.push_back(std::move(r));
    } catch (const EmptyGridError& e) {
      IdentityReport r;
      r.identity = id;
      r.variant = (HasVariants(id) && options.variant)
                      ? ToTag(*options.variant)
                      : VariantTag::kNone;
      r.verdict = Verdict::kSkipped;
      r.reason = e.what();
      result.reports.push_back(std::move(r));
    }
  }
  result.summaries = Summarize(result.reports);
  return result;
}

int ExitStatus(const RunResult& result, bool strict_printed) {
  bool evaluated = false;
  bool failed = false;
  for (const auto& r : result.reports) {
    if (r.verdict == Verdict::kSkipped) continue;
    evaluated = true;
    if (r.verdict == Verdict::kFail &&
        (r.variant != VariantTag::kPrinted || strict_printed)) {
      failed = true;
    }
  }
  if (!evaluated) return 2;
  return failed ? 1 : 0;
}

}  // namespace qgen
