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

#ifndef QGENOCCHI_RATIONAL_H_
#define QGENOCCHI_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qgen {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rat(const BigInt& value) : value_(value) {}  // NOLINT
  // Throws std::domain_error when `den` is zero.
  Rat(const BigInt& num, const BigInt& den);

  // Parses "a/b", "-a/b" or "a". Whitespace is not accepted.
  // Throws std::invalid_argument on malformed input or a zero denominator.
  static Rat Parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool IsZero() const { return sgn(value_) == 0; }
  bool IsOne() const { return value_ == 1; }
  bool IsInteger() const { return value_.get_den() == 1; }
  int Sign() const { return sgn(value_); }

  Rat Abs() const;
  Rat Inverse() const;  // throws std::domain_error on zero
  // Any integer exponent; negative exponents of zero throw.
  Rat Pow(int64_t exponent) const;

  double ToDouble() const { return value_.get_d(); }
  // Canonical "a/b" rendering, "a" for integers.
  std::string ToString() const;

  Rat& operator+=(const Rat& o) {
    value_ += o.value_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    value_ -= o.value_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    value_ *= o.value_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt Binomial(int64_t n, int64_t k);

}  // namespace qgen

#endif  // QGENOCCHI_RATIONAL_H_
