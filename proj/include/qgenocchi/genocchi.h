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

#ifndef QGENOCCHI_GENOCCHI_H_
#define QGENOCCHI_GENOCCHI_H_

// Modified q-Genocchi numbers and polynomials with weight (alpha, beta).
//
// For n >= 1 and integer x the closed form is
//
//   g_n(x) = n [2]_{q^beta} / (1 - q^alpha)^{n-1}
//            * sum_{l=0}^{n-1} C(n-1, l) (-1)^l q^{alpha l x} / (1 + q^{alpha l})
//
// with g_0 = 0. The numbers are g_n = g_n(0). Everything here is exact
// except GenocchiSeries, which evaluates the alternating series
// representation in double precision.

#include <cstdint>
#include <utility>
#include <vector>

#include "qgenocchi/qnum.h"
#include "qgenocchi/rational.h"

namespace qgen {

// Which form of a formula to evaluate: exactly as typeset, or the form that
// agrees with the definitions under exact evaluation.
enum class Variant { kPrinted, kCorrected };

const char* VariantName(Variant v);

// Memoized g_0..g_n for one (q, alpha, beta). Extend-only: growing the
// table never changes an existing entry. Not safe for concurrent mutation;
// extend first, then share by const reference.
class GenocchiTable {
 public:
  GenocchiTable(QPoint q, Weights w);

  const QPoint& q() const { return q_; }
  const Weights& weights() const { return w_; }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }

  void ExtendTo(int n);
  const Rat& At(int n) {
    ExtendTo(n);
    return values_[n];
  }
  // Throws std::out_of_range when n has not been computed yet.
  const Rat& operator[](int n) const;

 private:
  QPoint q_;
  Weights w_;
  std::vector<Rat> values_;
};

// Closed form g_n(x). Throws GuardError when 1 - q^alpha = 0 or
// 1 + q^{alpha l} = 0 for some l < n, std::invalid_argument for n < 0.
Rat GenocchiPoly(int n, int64_t x, Weights w, const QPoint& q);
Rat GenocchiPoly(int n, int64_t x, Weights w, const Rat& q);

Rat GenocchiNumber(int n, GenocchiTable& table);
Rat GenocchiNumber(int n, Weights w, const QPoint& q);

// g_n(x) = q^{-alpha x} sum_k C(n,k) q^{alpha k x} g_k [x]_{q^alpha}^{n-k},
// assembled from table entries. The table must already cover n.
Rat GenocchiPolyUmbral(int n, int64_t x, const GenocchiTable& table);
Rat GenocchiPolyUmbral(int n, int64_t x, Weights w, const QPoint& q);

struct SeriesApprox {
  double value = 0.0;
  int truncation_index = 0;
  double error_bound = 0.0;
};

// g_n(x) = n [2]_{q^beta} sum_{m>=0} (-1)^m [m + x]_{q^alpha}^{n-1} for real
// q in (0, 1). The alternating series does not converge in the ordinary
// sense (its terms tend to (1 - q^alpha)^{1-n}), so it is summed in the Abel
// sense through one Euler step:
//
//   sum (-1)^m a_m = a_0 / 2 + 1/2 sum (-1)^m (a_m - a_{m+1}),
//
// whose terms decay geometrically. Summation stops at the first m >= 2 where
// the last two scaled terms are both below `tol`; the bound is twice the
// larger of them over (1 - q^alpha), plus a rounding allowance.
// Throws std::invalid_argument for q outside (0, 1), tol <= 0 or n < 1.
SeriesApprox GenocchiSeries(int n, double x, Weights w, double q, double tol);

// g_n(1) + g_n and the expected value ([2]_{q^beta} at n = 1, else 0).
std::pair<Rat, Rat> RecurrenceSides(int n, Weights w, const QPoint& q);
Rat RecurrenceResidual(int n, Weights w, const QPoint& q);

// q^{-alpha} sum_k C(n,k) q^{alpha k} g_k + g_n against the same expected
// value. The table must cover n.
std::pair<Rat, Rat> UmbralRecurrenceSides(int n, const GenocchiTable& table);
Rat UmbralRecurrenceResidual(int n, Weights w, const QPoint& q);

// (g_{n+1, 1/q}(1 - x), (-1)^n q^{alpha n - beta} g_{n+1, q}(x)).
std::pair<Rat, Rat> ReflectionSides(int n, int64_t x, Weights w,
                                    const QPoint& q);

// (g_n(2), rhs) for n > 1. Printed rhs: n [2]_{q^beta} + g_n / q^alpha.
// Corrected rhs: n [2]_{q^beta} + g_n.
std::pair<Rat, Rat> ValueAtTwo(int n, Weights w, const QPoint& q,
                               Variant variant);

}  // namespace qgen

#endif  // QGENOCCHI_GENOCCHI_H_
