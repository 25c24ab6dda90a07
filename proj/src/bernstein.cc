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

#include "qgenocchi/bernstein.h"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgen {
namespace {

Rat Sign(int64_t l) { return (l % 2 == 0) ? Rat(1) : Rat(-1); }

BigInt BinomialProduct(const BernsteinSpec& spec) {
  BigInt prod = 1;
  for (int n : spec.degrees) prod *= Binomial(n, spec.k);
  return prod;
}

void RequireCovers(const GenocchiTable& table, int order) {
  if (table.max_index() < order) {
    throw std::out_of_range("Genocchi table covers " +
                            std::to_string(table.max_index()) + ", need " +
                            std::to_string(order));
  }
}

}  // namespace

int64_t BernsteinSpec::DegreeSum() const {
  return std::accumulate(degrees.begin(), degrees.end(), int64_t{0});
}

bool BernsteinSpec::Admissible() const {
  return DegreeSum() > int64_t{factors()} * k;
}

void BernsteinSpec::Validate() const {
  if (k < 0) throw std::invalid_argument("lower index k must be >= 0");
  if (degrees.empty()) throw std::invalid_argument("no degrees given");
  for (int n : degrees) {
    if (n < 0) throw std::invalid_argument("degrees must be >= 0");
  }
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
}

std::string BernsteinSpec::Describe() const {
  std::ostringstream os;
  os << "k=" << k << " degrees=[";
  for (size_t i = 0; i < degrees.size(); ++i) {
    os << (i ? " " : "") << degrees[i];
  }
  os << "] alpha=" << alpha;
  return os.str();
}

Rat BernsteinEval(int k, int n, int alpha, int64_t x, const QPoint& q) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  if (k < 0 || k > n) return Rat(0);
  const QPoint qa = q.Power(alpha);
  return Rat(Binomial(n, k)) * QBracket(x, qa).Pow(k) *
         QBracket(1 - x, qa.Inverse()).Pow(n - k);
}

std::pair<Rat, Rat> SymmetrySides(int k, int n, int alpha, int64_t x,
                                  const QPoint& q) {
  return {BernsteinEval(k, n, alpha, x, q),
          BernsteinEval(n - k, n, alpha, 1 - x, q.Inverse())};
}

int MomentOrder(const BernsteinSpec& spec) {
  return static_cast<int>(spec.DegreeSum()) + 1;
}

Rat MomentExpansionBare(const BernsteinSpec& spec, const GenocchiTable& table) {
  spec.Validate();
  const int64_t base = int64_t{spec.factors()} * spec.k;
  const int64_t m_max = spec.DegreeSum() - base;
  if (m_max < 0) {
    throw std::invalid_argument("bare expansion needs sum n_i >= s k (" +
                                spec.Describe() + ")");
  }
  RequireCovers(table, MomentOrder(spec));
  Rat sum;
  for (int64_t l = 0; l <= m_max; ++l) {
    const int64_t m = l + base + 1;
    sum += Sign(l) * Rat(Binomial(m_max, l)) * table[m] / Rat(m);
  }
  return sum;
}

Rat MomentIntegralExact(const BernsteinSpec& spec, const GenocchiTable& table) {
  spec.Validate();
  if (table.weights().alpha != spec.alpha) {
    throw std::invalid_argument("table alpha does not match Bernstein alpha");
  }
  const BigInt prod = BinomialProduct(spec);
  if (prod == 0) return Rat(0);
  return Rat(prod) * MomentExpansionBare(spec, table);
}

Rat MomentIntegralExact(const BernsteinSpec& spec, int beta, const QPoint& q) {
  GenocchiTable table(q, Weights::Make(spec.alpha, beta));
  table.ExtendTo(MomentOrder(spec));
  return MomentIntegralExact(spec, table);
}

Rat MomentTheoremRhs(const BernsteinSpec& spec,
                     const GenocchiTable& inverse_table, Variant variant,
                     Prefactor prefactor) {
  spec.Validate();
  if (!spec.Admissible()) {
    throw GuardError("inadmissible: sum n_i = " +
                     std::to_string(spec.DegreeSum()) + " <= s*k = " +
                     std::to_string(spec.factors() * spec.k));
  }
  if (inverse_table.weights().alpha != spec.alpha) {
    throw std::invalid_argument("table alpha does not match Bernstein alpha");
  }
  RequireCovers(inverse_table, MomentOrder(spec));

  const Weights w = inverse_table.weights();
  const Rat q = inverse_table.q().value().Inverse();
  const Rat two = Rat(1) + q.Pow(w.beta);
  const Rat factor = variant == Variant::kPrinted ? q.Pow(w.alpha - w.beta)
                                                  : q.Pow(w.beta);
  const int64_t total = spec.DegreeSum();
  const int64_t sk = int64_t{spec.factors()} * spec.k;

  Rat sum;
  for (int64_t l = 0; l <= sk; ++l) {
    const int64_t m = total - l + 1;
    sum += Sign(sk + l) * Rat(Binomial(sk, l)) *
           (two + factor * inverse_table[m] / Rat(m));
  }
  if (prefactor == Prefactor::kOmit) return sum;
  return Rat(BinomialProduct(spec)) * sum;
}

Rat MomentTheoremRhs(const BernsteinSpec& spec, int beta, const QPoint& q,
                     Variant variant, Prefactor prefactor) {
  GenocchiTable inverse_table(q.Inverse(), Weights::Make(spec.alpha, beta));
  inverse_table.ExtendTo(MomentOrder(spec));
  return MomentTheoremRhs(spec, inverse_table, variant, prefactor);
}

std::pair<Rat, Rat> ReflectedMomentSides(int n, Weights w, const QPoint& q) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  const BernsteinSpec spec{0, {n}, w.alpha};
  Rat lhs = Rat(n + 1) * q.value().Pow(-w.beta) *
            MomentIntegralExact(spec, w.beta, q);
  Rat rhs = GenocchiPoly(n + 1, 2, w, q.Inverse());
  return {std::move(lhs), std::move(rhs)};
}

Rat ReflectedMomentShiftRoute(int n, Weights w, const QPoint& q) {
  return Sign(n) * q.value().Pow(int64_t{n} * w.alpha - w.beta) *
         GenocchiPoly(n + 1, -1, w, q);
}

}  // namespace qgen
