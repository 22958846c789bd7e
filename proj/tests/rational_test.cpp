// Copyright 2026 The ISSP Toolkit Authors
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

#include "issp/rational.hpp"

#include <gtest/gtest.h>

namespace issp {
namespace {

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_TRUE(r.num() == -3);
  EXPECT_TRUE(r.den() == 4);
  EXPECT_EQ(Rational(10, 20), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(34, 100));
  EXPECT_GT(Rational(17, 12), Rational(5, 4));
}

TEST(Rational, FloorAndCeil) {
  EXPECT_TRUE(Rational(7, 2).floor() == 3);
  EXPECT_TRUE(Rational(7, 2).ceil() == 4);
  EXPECT_TRUE(Rational(6, 2).ceil() == 3);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("0.001"), Rational(1, 1000));
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("1.5"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("2"), Rational(2));
  EXPECT_EQ(Rational::parse(".25"), Rational(1, 4));
  EXPECT_FALSE(Rational::parse("1/0"));
  EXPECT_FALSE(Rational::parse("abc"));
  EXPECT_FALSE(Rational::parse("1."));
}

TEST(Rational, Rendering) {
  EXPECT_EQ(Rational(3, 2).to_string(), "3/2");
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_EQ(Rational(1, 1000).to_decimal_string(), "0.001");
  EXPECT_EQ(Rational(13, 10).to_decimal_string(), "1.3");
  EXPECT_EQ(Rational(1, 3).to_decimal_string(), "1/3");
  EXPECT_EQ(Rational(1, 66).to_percent_string(), "1.515%");
  EXPECT_EQ(Rational(0).to_percent_string(), "0.000%");
  EXPECT_EQ(Rational(1, 10).to_percent_string(), "10.000%");
  // 0.0005% rounds away from zero
  EXPECT_EQ(Rational(1, 200000).to_percent_string(), "0.001%");
}

}  // namespace
}  // namespace issp
