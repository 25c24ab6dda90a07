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

#include "qgenocchi/rational.h"

#include <cctype>
#include <stdexcept>

namespace qgen {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num_text) || !AllDigits(den_text)) {
    throw std::invalid_argument("malformed rational literal '" +
                                std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (negative) num = -num;
  return Rat(num, den);
}

Rat Rat::Abs() const {
  Rat r;
  r.value_ = abs(value_);
  return r;
}

Rat Rat::Inverse() const {
  if (IsZero()) throw std::domain_error("inverse of zero");
  Rat r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rat Rat::Pow(int64_t exponent) const {
  if (exponent < 0) return Inverse().Pow(-exponent);
  // Powers of coprime integers stay coprime, so no re-canonicalization.
  Rat r;
  mpz_pow_ui(mpq_numref(r.value_.get_mpq_t()), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(mpq_denref(r.value_.get_mpq_t()), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return r;
}

std::string Rat::ToString() const {
  if (IsInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

BigInt Binomial(int64_t n, int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace qgen
