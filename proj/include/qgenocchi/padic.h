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

#ifndef QGENOCCHI_PADIC_H_
#define QGENOCCHI_PADIC_H_

// Truncated fermionic p-adic q-integrals
//
//   I_N(f) = 1/[p^N]_{-q^beta} sum_{xi=0}^{p^N-1} q^{beta xi} f(xi) (-1)^xi
//
// evaluated exactly in Q. Only the error against a closed form is measured
// p-adically, through its valuation.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qgenocchi/bernstein.h"
#include "qgenocchi/parallel.h"
#include "qgenocchi/qnum.h"
#include "qgenocchi/rational.h"

namespace qgen {

// v_p of a rational; +infinity for zero.
class Valuation {
 public:
  static Valuation Infinite() { return Valuation(true, 0); }
  static Valuation Finite(int64_t v) { return Valuation(false, v); }

  bool infinite() const { return infinite_; }
  // Meaningless when infinite().
  int64_t value() const { return value_; }
  std::string ToString() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  Valuation(bool infinite, int64_t value)
      : infinite_(infinite), value_(value) {}
  bool infinite_;
  int64_t value_;
};

bool IsPrime(int64_t p);

// Throws std::invalid_argument unless p is prime.
Valuation PAdicValuation(const Rat& r, int64_t p);

class PadicContext {
 public:
  // q must be an integer 1 + p t with t != 0, so |q - 1|_p < 1. p must be an
  // odd prime. levels <= 0 selects DefaultLevels(p).
  PadicContext(int64_t p, const Rat& q, int levels = 0);

  int64_t p() const { return p_; }
  const QPoint& q() const { return q_; }
  int levels() const { return levels_; }

  // Largest N with p^N <= 625, at least 2: 5 for p = 3, 4 for p = 5.
  static int DefaultLevels(int64_t p);

 private:
  int64_t p_;
  QPoint q_;
  int levels_;
};

struct IntegrandSpec {
  enum class Kind {
    kConstantOne,      // f = 1
    kGenocchiKernel,   // f = q^{-beta xi} [x + xi]_{q^alpha}^n
    kReflectedKernel,  // f = q^{-beta xi} [1 - xi]_{q^{-alpha}}^n
    kBernsteinProduct  // f = q^{-beta xi} prod_i B_{k,n_i}(xi, q)
  };

  Kind kind = Kind::kConstantOne;
  Weights w;
  int n = 0;
  int64_t x = 0;
  int k = 0;
  std::vector<int> degrees;

  static IntegrandSpec ConstantOne(Weights w);
  static IntegrandSpec GenocchiKernel(int n, int64_t x, Weights w);
  static IntegrandSpec ReflectedKernel(int n, Weights w);
  static IntegrandSpec BernsteinProduct(int k, std::vector<int> degrees,
                                        Weights w);

  static const char* KindName(Kind kind);
  // Throws std::invalid_argument on unknown names.
  static Kind ParseKind(const std::string& name);

  // f(xi), including its own q^{-beta xi} twist.
  Rat Evaluate(int64_t xi, const QPoint& q) const;
  // (-1)^xi q^{beta xi} f(xi), with the twist cancelled symbolically.
  Rat Summand(int64_t xi, const QPoint& q) const;
  // Closed-form value of the full integral.
  Rat ExactIntegral(const QPoint& q) const;
  std::string Describe() const;
};

// Sum of Summand(xi) over begin <= xi < end.
Rat AlternatingSum(const IntegrandSpec& f, const QPoint& q, int64_t begin,
                   int64_t end, Execution exec = Execution::kParallel);

// I_N(f) for 1 <= level <= ctx.levels().
Rat FermionicPartialSum(const IntegrandSpec& f, const PadicContext& ctx,
                        int level, Execution exec = Execution::kParallel);

struct ProfileEntry {
  int level = 0;
  Rat partial_sum;
  Valuation error_valuation = Valuation::Infinite();
};

struct ConvergenceProfile {
  std::vector<ProfileEntry> entries;

  bool NonDecreasing() const;
  // Either exact at every level, or non-decreasing with the last error
  // valuation strictly above the first.
  bool Converging() const;
  std::string ValuationTrace() const;  // e.g. "1,2,3,4,5"
};

ConvergenceProfile ComputeConvergenceProfile(
    const IntegrandSpec& f, const PadicContext& ctx, const Rat& reference,
    Execution exec = Execution::kParallel);

}  // namespace qgen

#endif  // QGENOCCHI_PADIC_H_
