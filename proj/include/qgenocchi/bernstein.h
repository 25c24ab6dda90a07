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

#ifndef QGENOCCHI_BERNSTEIN_H_
#define QGENOCCHI_BERNSTEIN_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qgenocchi/genocchi.h"
#include "qgenocchi/qnum.h"
#include "qgenocchi/rational.h"

namespace qgen {

// A product B_{k,n_1}^{(alpha)} ... B_{k,n_s}^{(alpha)} sharing the lower
// index k.
struct BernsteinSpec {
  int k = 0;
  std::vector<int> degrees;
  int alpha = 1;

  int factors() const { return static_cast<int>(degrees.size()); }
  int64_t DegreeSum() const;
  // sum n_i > s k, the hypothesis of the product theorems.
  bool Admissible() const;
  // Throws std::invalid_argument on k < 0, empty or negative degrees, or
  // alpha < 1.
  void Validate() const;
  std::string Describe() const;
};

// B_{k,n}^{(alpha)}(x, q) = C(n,k) [x]_{q^alpha}^k [1-x]_{q^{-alpha}}^{n-k};
// zero outside 0 <= k <= n.
Rat BernsteinEval(int k, int n, int alpha, int64_t x, const QPoint& q);

// (B_{k,n}(x, q), B_{n-k,n}(1-x, 1/q)).
std::pair<Rat, Rat> SymmetrySides(int k, int n, int alpha, int64_t x,
                                  const QPoint& q);

// Highest Genocchi index the moment routines read.
int MomentOrder(const BernsteinSpec& spec);

// sum_{l=0}^{M} C(M,l) (-1)^l g_{l+sk+1} / (l+sk+1) with M = sum n_i - s k.
// Requires M >= 0 and `table` (at q) extended to MomentOrder(spec).
Rat MomentExpansionBare(const BernsteinSpec& spec, const GenocchiTable& table);

// Exact fermionic integral of q^{-beta xi} prod_i B_{k,n_i}(xi, q) against
// mu_{-q^beta}: expand [1-xi]_{q^{-alpha}} = 1 - [xi]_{q^alpha} and
// integrate each power of [xi]_{q^alpha} as g_{m+1}/(m+1). Valid for every
// spec; zero whenever some n_i < k. `table` is at q with weights
// (spec.alpha, beta) and must cover MomentOrder(spec).
Rat MomentIntegralExact(const BernsteinSpec& spec, const GenocchiTable& table);
Rat MomentIntegralExact(const BernsteinSpec& spec, int beta, const QPoint& q);

enum class Prefactor { kInclude, kOmit };

// Right-hand side of the moment theorems, built from g_{m, 1/q}:
//
//   prod C(n_i,k) sum_{l=0}^{sk} C(sk,l) (-1)^{sk+l}
//       ([2]_{q^beta} + c g_{N-l+1, 1/q} / (N-l+1)),  N = sum n_i,
//
// where c = q^{alpha-beta} (printed) or q^beta (corrected). At k = 0 this
// collapses to the single-term branch. kOmit drops prod C(n_i,k), giving the
// right-hand side of the bare expansion identities. `inverse_table` is at
// 1/q and must cover MomentOrder(spec). Throws GuardError when the spec is
// not admissible.
Rat MomentTheoremRhs(const BernsteinSpec& spec,
                     const GenocchiTable& inverse_table, Variant variant,
                     Prefactor prefactor = Prefactor::kInclude);
Rat MomentTheoremRhs(const BernsteinSpec& spec, int beta, const QPoint& q,
                     Variant variant, Prefactor prefactor = Prefactor::kInclude);

// ((n+1) q^{-beta} I_n, g_{n+1, 1/q}(2)) where I_n is the integral of
// q^{-beta xi} [1-xi]_{q^{-alpha}}^n.
std::pair<Rat, Rat> ReflectedMomentSides(int n, Weights w, const QPoint& q);
// The same quantity through the shifted polynomial:
// (-1)^n q^{n alpha - beta} g_{n+1, q}(-1).
Rat ReflectedMomentShiftRoute(int n, Weights w, const QPoint& q);

}  // namespace qgen

#endif  // QGENOCCHI_BERNSTEIN_H_
