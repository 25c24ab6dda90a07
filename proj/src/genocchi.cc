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

#include "qgenocchi/genocchi.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgen {
namespace {

constexpr int kMaxSeriesTerms = 50'000'000;

Rat Sign(int64_t l) { return (l % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace

const char* VariantName(Variant v) {
  return v == Variant::kPrinted ? "printed" : "corrected";
}

GenocchiTable::GenocchiTable(QPoint q, Weights w)
    : q_(std::move(q)), w_(w) {
  values_.push_back(Rat(0));
  values_.push_back(TwoBracket(w_.beta, q_) / Rat(2));
}

void GenocchiTable::ExtendTo(int n) {
  values_.reserve(std::max<size_t>(values_.size(), n + 1));
  for (int m = static_cast<int>(values_.size()); m <= n; ++m) {
    values_.push_back(GenocchiPoly(m, 0, w_, q_));
  }
}

const Rat& GenocchiTable::operator[](int n) const {
  if (n < 0 || n > max_index()) {
    throw std::out_of_range("Genocchi table holds indices 0.." +
                            std::to_string(max_index()) + ", asked for " +
                            std::to_string(n));
  }
  return values_[n];
}

Rat GenocchiPoly(int n, int64_t x, Weights w, const Rat& q) {
  if (n < 0) throw std::invalid_argument("Genocchi index must be >= 0");
  if (n == 0) return Rat(0);
  RequireNonUnitPower(q, w.alpha);
  RequirePoleFree(q, w.alpha, n - 1);

  const Rat qa = q.Pow(w.alpha);
  const Rat qax = qa.Pow(x);
  Rat sum;
  Rat qal(1);   // q^{alpha l}
  Rat qalx(1);  // q^{alpha l x}
  for (int l = 0; l < n; ++l) {
    sum += Sign(l) * Rat(Binomial(n - 1, l)) * qalx / (Rat(1) + qal);
    qal *= qa;
    qalx *= qax;
  }
  return Rat(n) * (Rat(1) + q.Pow(w.beta)) * sum / (Rat(1) - qa).Pow(n - 1);
}

Rat GenocchiPoly(int n, int64_t x, Weights w, const QPoint& q) {
  return GenocchiPoly(n, x, w, q.value());
}

Rat GenocchiNumber(int n, GenocchiTable& table) { return table.At(n); }

Rat GenocchiNumber(int n, Weights w, const QPoint& q) {
  GenocchiTable table(q, w);
  return table.At(n);
}

Rat GenocchiPolyUmbral(int n, int64_t x, const GenocchiTable& table) {
  if (n < 0) throw std::invalid_argument("Genocchi index must be >= 0");
  const Rat& q = table.q().value();
  const int alpha = table.weights().alpha;
  const Rat qa = q.Pow(alpha);
  const Rat qax = qa.Pow(x);
  const Rat bracket = QBracket(x, qa);

  Rat sum;
  Rat qakx(1);  // q^{alpha k x}
  for (int k = 0; k <= n; ++k) {
    sum += Rat(Binomial(n, k)) * qakx * table[k] * bracket.Pow(n - k);
    qakx *= qax;
  }
  return qax.Inverse() * sum;
}

Rat GenocchiPolyUmbral(int n, int64_t x, Weights w, const QPoint& q) {
  GenocchiTable table(q, w);
  table.ExtendTo(n);
  return GenocchiPolyUmbral(n, x, table);
}

SeriesApprox GenocchiSeries(int n, double x, Weights w, double q, double tol) {
  if (n < 1) throw std::invalid_argument("series form needs n >= 1");
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("series does not converge for q = " +
                                std::to_string(q) + "; need 0 < q < 1");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

  const double qa = std::pow(q, w.alpha);
  const double scale = n * (1.0 + std::pow(q, w.beta));
  auto bracket = [&](int m) { return (1.0 - std::pow(qa, m + x)) / (1.0 - qa); };
  // a_m - a_{m+1} = -q^{alpha(m+x)} sum_j b_m^j b_{m+1}^{n-2-j}, b_m = [m+x],
  // which avoids cancelling two large powers.
  auto difference = [&](int m, double b_m, double b_next) {
    double s = 0.0;
    double bm_pow = 1.0;
    for (int j = 0; j <= n - 2; ++j) {
      s += bm_pow * std::pow(b_next, n - 2 - j);
      bm_pow *= b_m;
    }
    return -std::pow(qa, m + x) * s;
  };

  double b_curr = bracket(0);
  double sum = 0.5 * std::pow(b_curr, n - 1);
  // Rounding budget in units of DBL_EPSILON, before scaling.
  double rounding = (n + 2) * std::abs(sum);
  double prev_scaled = 0.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    const double b_next = bracket(m + 1);
    const double u =
        0.5 * difference(m, b_curr, b_next) * ((m % 2 == 0) ? 1.0 : -1.0);
    sum += u;
    rounding += (2.0 * n + 6.0) * std::abs(u) + std::abs(sum);
    const double scaled = std::abs(scale * u);
    if (m >= 2 && scaled < tol && prev_scaled < tol) {
      SeriesApprox out;
      out.value = scale * sum;
      out.truncation_index = m;
      out.error_bound = std::max(scaled, prev_scaled) * 2.0 / (1.0 - qa) +
                        DBL_EPSILON * (scale * rounding + 4.0 * std::abs(out.value));
      return out;
    }
    prev_scaled = scaled;
    b_curr = b_next;
  }
  throw std::runtime_error("series did not reach tolerance within " +
                           std::to_string(kMaxSeriesTerms) + " terms");
}

std::pair<Rat, Rat> RecurrenceSides(int n, Weights w, const QPoint& q) {
  if (n < 1) throw std::invalid_argument("recurrence is stated for n >= 1");
  Rat lhs = GenocchiPoly(n, 1, w, q) + GenocchiPoly(n, 0, w, q);
  Rat rhs = n == 1 ? TwoBracket(w.beta, q) : Rat(0);
  return {std::move(lhs), std::move(rhs)};
}

Rat RecurrenceResidual(int n, Weights w, const QPoint& q) {
  auto [lhs, rhs] = RecurrenceSides(n, w, q);
  return lhs - rhs;
}

std::pair<Rat, Rat> UmbralRecurrenceSides(int n, const GenocchiTable& table) {
  if (n < 1) throw std::invalid_argument("recurrence is stated for n >= 1");
  const Rat qa = table.q().value().Pow(table.weights().alpha);
  Rat sum;
  Rat qak(1);
  for (int k = 0; k <= n; ++k) {
    sum += Rat(Binomial(n, k)) * qak * table[k];
    qak *= qa;
  }
  Rat lhs = sum / qa + table[n];
  Rat rhs = n == 1 ? TwoBracket(table.weights().beta, table.q()) : Rat(0);
  return {std::move(lhs), std::move(rhs)};
}

Rat UmbralRecurrenceResidual(int n, Weights w, const QPoint& q) {
  GenocchiTable table(q, w);
  table.ExtendTo(n);
  auto [lhs, rhs] = UmbralRecurrenceSides(n, table);
  return lhs - rhs;
}

std::pair<Rat, Rat> ReflectionSides(int n, int64_t x, Weights w,
                                    const QPoint& q) {
  if (n < 0) throw std::invalid_argument("reflection needs n >= 0");
  Rat lhs = GenocchiPoly(n + 1, 1 - x, w, q.Inverse());
  Rat rhs = Sign(n) * q.value().Pow(int64_t{w.alpha} * n - w.beta) *
            GenocchiPoly(n + 1, x, w, q);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rat, Rat> ValueAtTwo(int n, Weights w, const QPoint& q,
                               Variant variant) {
  if (n <= 1) {
    throw GuardError("value at two is stated for n > 1, got n=" +
                     std::to_string(n));
  }
  Rat lhs = GenocchiPoly(n, 2, w, q);
  const Rat gn = GenocchiPoly(n, 0, w, q);
  Rat rhs = Rat(n) * TwoBracket(w.beta, q) +
            (variant == Variant::kPrinted ? gn / q.value().Pow(w.alpha) : gn);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qgen
