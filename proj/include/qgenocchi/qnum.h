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

#ifndef QGENOCCHI_QNUM_H_
#define QGENOCCHI_QNUM_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qgenocchi/rational.h"

namespace qgen {

// A precondition of a formula does not hold at the sampled point (a pole,
// a vanishing denominator, an excluded q). The message names the guard.
class GuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The pair of positive integer weights (alpha, beta).
struct Weights {
  int alpha = 1;
  int beta = 1;

  // Throws std::invalid_argument unless both weights are >= 1.
  static Weights Make(int alpha, int beta);

  friend bool operator==(const Weights&, const Weights&) = default;
};

// A rational sample value of q, never 0, 1 or -1.
class QPoint {
 public:
  // Throws GuardError for q in {0, 1, -1}.
  explicit QPoint(Rat value);
  static QPoint Parse(std::string_view text) { return QPoint(Rat::Parse(text)); }

  const Rat& value() const { return value_; }
  QPoint Inverse() const { return QPoint(value_.Inverse()); }
  // q^e as a new sample point; |q| != 1 keeps it admissible.
  QPoint Power(int64_t e) const { return QPoint(value_.Pow(e)); }

  // 1 + q^{alpha l} != 0 for every 0 <= l <= l_max.
  bool PoleFree(int alpha, int64_t l_max) const;

  friend bool operator==(const QPoint& a, const QPoint& b) {
    return a.value_ == b.value_;
  }

 private:
  Rat value_;
};

// Throws GuardError("pole at q^{alpha l} = -1 (l=...)") naming the first
// offending l when 1 + q^{alpha l} vanishes for some 0 <= l <= l_max.
void RequirePoleFree(const Rat& q, int alpha, int64_t l_max);
// Throws GuardError when 1 - q^alpha vanishes.
void RequireNonUnitPower(const Rat& q, int alpha);

Rat QPow(const QPoint& q, int64_t e);

// [x]_q = (1 - q^x) / (1 - q). At q = 1 this is the limit value x.
// q = 0 with x < 0 throws GuardError.
Rat QBracket(int64_t x, const Rat& q);
Rat QBracket(int64_t x, const QPoint& q);

// [2]_{q^beta} = 1 + q^beta.
Rat TwoBracket(int beta, const QPoint& q);

}  // namespace qgen

#endif  // QGENOCCHI_QNUM_H_
