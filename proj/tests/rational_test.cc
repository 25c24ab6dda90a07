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

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

namespace qgen {
namespace {

TEST(RatTest, ParsesCanonicalLiterals) {
  EXPECT_EQ(Rat::Parse("3/2").ToString(), "3/2");
  EXPECT_EQ(Rat::Parse("-4/6").ToString(), "-2/3");
  EXPECT_EQ(Rat::Parse("7").ToString(), "7");
  EXPECT_EQ(Rat::Parse("0/5").ToString(), "0");
  EXPECT_EQ(Rat::Parse("10/5").ToString(), "2");
  EXPECT_EQ(Rat::Parse("-0").ToString(), "0");
}

TEST(RatTest, RejectsMalformedLiterals) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "+1",
                          "1/-2", "a/b", "1//2", "0x10"}) {
    EXPECT_THROW(Rat::Parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RatTest, ZeroIsZeroOverOne) {
  const Rat z = Rat(3) - Rat(3);
  EXPECT_TRUE(z.IsZero());
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
}

TEST(RatTest, ConstructorRejectsZeroDenominator) {
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  EXPECT_THROW(Rat(0).Inverse(), std::domain_error);
}

TEST(RatTest, PowersAcrossSigns) {
  EXPECT_EQ(Rat(2).Pow(0), Rat(1));
  EXPECT_EQ(Rat(2).Pow(-3), Rat::Parse("1/8"));
  EXPECT_EQ(Rat::Parse("3/2").Pow(2), Rat::Parse("9/4"));
  EXPECT_EQ(Rat::Parse("-2/3").Pow(-3), Rat::Parse("-27/8"));
  EXPECT_EQ(Rat(0).Pow(0), Rat(1));
}

// Every arithmetic result is in lowest terms with a positive denominator,
// so renormalizing changes nothing.
TEST(RatTest, ResultsStayCanonical) {
  std::mt19937_64 rng(20260116);
  std::uniform_int_distribution<int> dist(-50, 50);
  auto random_rat = [&] {
    int den = 0;
    while (den == 0) den = dist(rng);
    return Rat(BigInt(dist(rng)), BigInt(den));
  };
  for (int i = 0; i < 2000; ++i) {
    const Rat a = random_rat();
    const Rat b = random_rat();
    std::vector<Rat> results = {a + b, a - b, a * b, -a, a.Pow(3)};
    if (!b.IsZero()) {
      results.push_back(a / b);
      results.push_back(b.Pow(-2));
    }
    for (const Rat& r : results) {
      EXPECT_GT(r.den(), 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      EXPECT_EQ(g, 1) << r;
      EXPECT_EQ(Rat(r.num(), r.den()), r);
      EXPECT_EQ(Rat::Parse(r.ToString()), r);
    }
  }
}

TEST(RatTest, Ordering) {
  EXPECT_LT(Rat::Parse("-1/2"), Rat(0));
  EXPECT_GT(Rat::Parse("2/3"), Rat::Parse("1/2"));
  EXPECT_EQ(Rat::Parse("2/4"), Rat::Parse("1/2"));
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(Binomial(4, 2), 6);
  EXPECT_EQ(Binomial(3, 5), 0);
  EXPECT_EQ(Binomial(0, 0), 1);
  EXPECT_EQ(Binomial(5, -1), 0);
  EXPECT_EQ(Binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_THROW(Binomial(-1, 0), std::invalid_argument);
}

TEST(BinomialTest, PascalRule) {
  for (int n = 1; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(Binomial(n, k), Binomial(n - 1, k - 1) + Binomial(n - 1, k));
    }
  }
}

}  // namespace
}  // namespace qgen
