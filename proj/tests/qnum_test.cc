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

#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace qgen {
namespace {

std::vector<QPoint> SampleSet() {
  std::vector<QPoint> out;
  for (const char* q : {"2", "3", "1/2", "2/3", "-2", "5/3"}) {
    out.push_back(QPoint::Parse(q));
  }
  return out;
}

TEST(QPointTest, RejectsExcludedValues) {
  for (const char* q : {"0", "1", "-1", "2/2", "-3/3"}) {
    EXPECT_THROW(QPoint::Parse(q), GuardError) << q;
  }
  EXPECT_NO_THROW(QPoint::Parse("-2"));
}

TEST(QPointTest, InverseAndPower) {
  const QPoint q = QPoint::Parse("2/3");
  EXPECT_EQ(q.Inverse().value(), Rat::Parse("3/2"));
  EXPECT_EQ(q.Power(-2).value(), Rat::Parse("9/4"));
}

TEST(WeightsTest, RequiresPositive) {
  EXPECT_THROW(Weights::Make(0, 1), std::invalid_argument);
  EXPECT_THROW(Weights::Make(1, 0), std::invalid_argument);
  EXPECT_EQ(Weights::Make(2, 3), (Weights{2, 3}));
}

TEST(QPowTest, Examples) {
  EXPECT_EQ(QPow(QPoint::Parse("2"), 0), Rat(1));
  EXPECT_EQ(QPow(QPoint::Parse("2"), -3), Rat::Parse("1/8"));
  EXPECT_EQ(QPow(QPoint::Parse("3/2"), 2), Rat::Parse("9/4"));
}

TEST(QBracketTest, Examples) {
  const QPoint two = QPoint::Parse("2");
  EXPECT_EQ(QBracket(0, two), Rat(0));
  EXPECT_EQ(QBracket(3, two), Rat(7));
  EXPECT_EQ(QBracket(-1, two), Rat::Parse("-1/2"));
  EXPECT_EQ(QBracket(5, Rat(1)), Rat(5));
  EXPECT_EQ(QBracket(-4, Rat(1)), Rat(-4));
}

TEST(QBracketTest, ZeroBase) {
  EXPECT_EQ(QBracket(0, Rat(0)), Rat(0));
  EXPECT_EQ(QBracket(3, Rat(0)), Rat(1));
  EXPECT_THROW(QBracket(-1, Rat(0)), GuardError);
}

TEST(QBracketTest, MatchesGeometricSum) {
  for (const QPoint& q : SampleSet()) {
    for (int x = -6; x <= 6; ++x) {
      EXPECT_EQ(QBracket(x, q), oracle::GeometricBracket(x, q.value()))
          << "x=" << x << " q=" << q.value();
    }
  }
}

TEST(TwoBracketTest, Examples) {
  EXPECT_EQ(TwoBracket(1, QPoint::Parse("2")), Rat(3));
  EXPECT_EQ(TwoBracket(2, QPoint::Parse("1/2")), Rat::Parse("5/4"));
  EXPECT_THROW(TwoBracket(1, QPoint::Parse("-1")), GuardError);
  for (const QPoint& q : SampleSet()) {
    for (int beta = 1; beta <= 3; ++beta) {
      EXPECT_EQ(TwoBracket(beta, q), QBracket(2, q.Power(beta)));
    }
  }
}

// [x + y]_q = [x]_q + q^x [y]_q.
TEST(QBracketTest, AdditionRule) {
  for (const QPoint& q : SampleSet()) {
    for (int x = -5; x <= 5; ++x) {
      for (int y = -5; y <= 5; ++y) {
        EXPECT_EQ(QBracket(x + y, q), QBracket(x, q) + QPow(q, x) * QBracket(y, q));
      }
    }
  }
}

// [1 - x]_{1/q} = 1 - [x]_q.
TEST(QBracketTest, ReflectionRule) {
  for (const QPoint& q : SampleSet()) {
    for (int x = -6; x <= 6; ++x) {
      EXPECT_EQ(QBracket(1 - x, q.Inverse()), Rat(1) - QBracket(x, q));
    }
  }
}

// [1 - x]_{q^{-alpha}} = -q^alpha [x - 1]_{q^alpha}.
TEST(QBracketTest, NegationOfBase) {
  for (const QPoint& q : SampleSet()) {
    for (int alpha = 1; alpha <= 3; ++alpha) {
      const QPoint qa = q.Power(alpha);
      for (int x = -6; x <= 6; ++x) {
        EXPECT_EQ(QBracket(1 - x, qa.Inverse()),
                  -qa.value() * QBracket(x - 1, qa));
      }
    }
  }
}

TEST(PoleGuardTest, NamesTheOffendingIndex) {
  EXPECT_NO_THROW(RequirePoleFree(Rat(2), 1, 10));
  try {
    RequirePoleFree(Rat(-1), 1, 4);
    FAIL() << "expected a pole";
  } catch (const GuardError& e) {
    EXPECT_NE(std::string(e.what()).find("pole at q^{alpha l} = -1 (l=1"),
              std::string::npos)
        << e.what();
  }
  // q = -1 with even alpha never hits -1.
  EXPECT_NO_THROW(RequirePoleFree(Rat(-1), 2, 4));
  EXPECT_THROW(RequireNonUnitPower(Rat(-1), 2), GuardError);
  for (const QPoint& q : SampleSet()) EXPECT_TRUE(q.PoleFree(3, 20));
}

}  // namespace
}  // namespace qgen
