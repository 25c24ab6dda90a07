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

#include "qgenocchi/qnum.h"

namespace qgen {

Weights Weights::Make(int alpha, int beta) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("weights must be positive, got alpha=" +
                                std::to_string(alpha) +
                                " beta=" + std::to_string(beta));
  }
  return Weights{alpha, beta};
}

QPoint::QPoint(Rat value) : value_(std::move(value)) {
  if (value_.IsZero()) throw GuardError("q = 0 is not an admissible sample");
  if (value_.Abs().IsOne()) {
    throw GuardError("q = " + value_.ToString() +
                     " is not an admissible sample (q must avoid 0, 1, -1)");
  }
}

bool QPoint::PoleFree(int alpha, int64_t l_max) const {
  for (int64_t l = 0; l <= l_max; ++l) {
    if ((Rat(1) + value_.Pow(alpha * l)).IsZero()) return false;
  }
  return true;
}

void RequirePoleFree(const Rat& q, int alpha, int64_t l_max) {
  for (int64_t l = 0; l <= l_max; ++l) {
    if ((Rat(1) + q.Pow(alpha * l)).IsZero()) {
      throw GuardError("pole at q^{alpha l} = -1 (l=" + std::to_string(l) +
                       ", alpha=" + std::to_string(alpha) +
                       ", q=" + q.ToString() + ")");
    }
  }
}

void RequireNonUnitPower(const Rat& q, int alpha) {
  if (q.Pow(alpha).IsOne()) {
    throw GuardError("1 - q^alpha = 0 (alpha=" + std::to_string(alpha) +
                     ", q=" + q.ToString() + ")");
  }
}

Rat QPow(const QPoint& q, int64_t e) { return q.value().Pow(e); }

Rat QBracket(int64_t x, const Rat& q) {
  if (q.IsOne()) return Rat(x);
  if (q.IsZero()) {
    if (x < 0) throw GuardError("[x]_q with q = 0 and negative x");
    return x == 0 ? Rat(0) : Rat(1);
  }
  return (Rat(1) - q.Pow(x)) / (Rat(1) - q);
}

Rat QBracket(int64_t x, const QPoint& q) { return QBracket(x, q.value()); }

Rat TwoBracket(int beta, const QPoint& q) {
  return Rat(1) + q.value().Pow(beta);
}

}  // namespace qgen
