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

#include "issp/integer.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "issp/core.hpp"

namespace issp {
namespace {

TEST(Integer, ParsesAndPrintsBeyondSixtyFourBits) {
  const Int big = parse_int("170141183460469231731687303715884105727").value();
  EXPECT_TRUE(big == kIntMax);
  EXPECT_EQ(to_string(big), "170141183460469231731687303715884105727");
  EXPECT_EQ(to_string(-big - 1), "-170141183460469231731687303715884105728");
  EXPECT_EQ(to_string(0), "0");
  EXPECT_EQ(to_string(-42), "-42");
}

TEST(Integer, ParseRejectsJunkAndOverflow) {
  EXPECT_FALSE(parse_int(""));
  EXPECT_FALSE(parse_int("-"));
  EXPECT_FALSE(parse_int("12a"));
  EXPECT_FALSE(parse_int("1 2"));
  EXPECT_FALSE(parse_int("170141183460469231731687303715884105728"));
  EXPECT_TRUE(parse_int("+7") == Int{7});
}

TEST(Integer, CeilDivision) {
  EXPECT_TRUE(ceil_div(10, 5) == 2);
  EXPECT_TRUE(ceil_div(11, 5) == 3);
  EXPECT_TRUE(ceil_div(0, 5) == 0);
  EXPECT_TRUE(floor_div(11, 5) == 2);
}

TEST(Integer, Fits64) {
  EXPECT_TRUE(fits_int64(std::numeric_limits<std::int64_t>::max()));
  EXPECT_FALSE(fits_int64(Int{std::numeric_limits<std::int64_t>::max()} + 1));
  EXPECT_TRUE(fits_int64(std::numeric_limits<std::int64_t>::min()));
}

// 1e5 intervals with hi = 1e14 sum to 1e19, above the signed 64-bit range.
TEST(Integer, SumsPastSixtyFourBitsStayExact) {
  const std::size_t n = 100000;
  const Int hi = 100'000'000'000'000;
  std::vector<std::pair<Int, Int>> items(n, {hi, hi});
  const Int target = hi * static_cast<Int>(n) + 1;
  const Instance inst = validate(items, target);
  EXPECT_EQ(to_string(inst.sum_hi()), "10000000000000000000");
  EXPECT_FALSE(fits_int64(inst.sum_hi()));
  Solution all{std::vector<Int>(n, hi), inst.sum_hi()};
  EXPECT_EQ(to_string(evaluate(inst, all)), "10000000000000000000");
}

}  // namespace
}  // namespace issp
