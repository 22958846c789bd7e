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

#include "issp/analysis.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace issp {
namespace {

using testing::make;
using testing::worked_example;

// Clipped knapsack optimum by enumerating selections.
Int knapsack_optimum(const KnapsackInstance& kp) {
  Int best = 0;
  const std::size_t n = kp.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Int w = 0, p = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        w += kp.weights[i];
        p += kp.profits[i];
      }
    }
    if (w <= kp.capacity) best = std::max(best, clipped_value(kp, p));
  }
  return best;
}

TEST(ToKnapsack, Examples) {
  const KnapsackInstance kp = to_knapsack(worked_example());
  EXPECT_EQ(kp.weights, (std::vector<Int>{10, 10, 60, 20}));
  EXPECT_EQ(kp.profits, (std::vector<Int>{20, 25, 85, 50}));
  EXPECT_TRUE(kp.capacity == 100);

  const KnapsackInstance point = to_knapsack(make({{7, 7}}, 9));
  EXPECT_EQ(point.weights, point.profits);

  Instance empty;
  empty.target = 5;
  EXPECT_EQ(to_knapsack(empty).size(), 0u);
}

TEST(ToKnapsack, ClippedOptimumMatchesDirectEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = testing::random_instance(rng, 5, 9, 30);
    EXPECT_TRUE(knapsack_optimum(to_knapsack(inst)) ==
                testing::direct_optimum(inst));
  }
}

TEST(SolutionFromSubset, Examples) {
  const Instance two = make({{3, 5}, {4, 6}}, 9);
  const std::vector<std::size_t> both{0, 1};
  const Solution s = solution_from_subset(two, both);
  EXPECT_EQ(s.values, (std::vector<Int>{5, 4}));
  EXPECT_TRUE(s.total == 9);

  const Solution none = solution_from_subset(two, {});
  EXPECT_EQ(none.values, (std::vector<Int>{0, 0}));
  EXPECT_TRUE(none.total == 0);

  const Instance w = worked_example();
  const std::vector<std::size_t> three{0, 1, 2};
  const Solution f = solution_from_subset(w, three);
  EXPECT_TRUE(f.total == 100);
  EXPECT_TRUE(evaluate(w, f) == 100);
  EXPECT_EQ(count_midrange(w, f), 1u);
  EXPECT_TRUE(f.values[3] == 0);
}

TEST(SolutionFromSubset, RejectsOverweightSubset) {
  const Instance two = make({{3, 5}, {4, 6}}, 6);
  const std::vector<std::size_t> both{0, 1};
  try {
    solution_from_subset(two, both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSubsetInfeasible);
  }
}

TEST(SolutionFromSubset, ValueMapOverAllSubsets) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 40, 150);
    const std::size_t n = inst.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      Int lo = 0, hi = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          s.push_back(i);
          lo += inst.intervals[i].lo;
          hi += inst.intervals[i].hi;
        }
      }
      if (lo > inst.target) continue;
      const Solution sol = solution_from_subset(inst, s);
      ASSERT_TRUE(evaluate(inst, sol) == std::min(hi, inst.target));
      ASSERT_LE(count_midrange(inst, sol), 1u);
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_EQ(sol.values[i] != 0, (mask >> i & 1) != 0);
      }
    }
  }
}

TEST(GapCondition, Examples) {
  const auto yes = check_gap_condition(make({{3, 5}, {4, 6}}, 9));
  EXPECT_TRUE(yes.holds);
  EXPECT_FALSE(yes.diagnostic);
  EXPECT_FALSE(check_gap_condition(make({{3, 5}, {4, 6}}, 7)).holds);
  const auto degenerate = check_gap_condition(make({{5, 5}, {1, 3}}, 50));
  EXPECT_FALSE(degenerate.holds);
  ASSERT_TRUE(degenerate.diagnostic);
  EXPECT_NE(degenerate.diagnostic->find("DegenerateLength"), std::string::npos);
  // ceil(60 / 10) * 60 = 360 > 100
  EXPECT_FALSE(check_gap_condition(worked_example()).holds);
}

TEST(MinRatio, Examples) {
  EXPECT_EQ(min_ratio(make({{1, 2}, {2, 4}, {3, 6}}, 7)), Rational(2));
  EXPECT_EQ(min_ratio(make({{10, 15}}, 20)), Rational(3, 2));
  EXPECT_EQ(min_ratio(worked_example()), Rational(17, 12));
}

TEST(SolvePolynomial, Examples) {
  const auto a = solve_polynomial(make({{3, 5}, {4, 6}}, 9));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->route, PolynomialRoute::kAllIntervals);
  EXPECT_TRUE(a->outcome.value == 9);
  EXPECT_EQ(a->outcome.kind, SolveKind::kExact);

  const Instance wide = make({{1, 2}, {2, 4}, {3, 6}}, 7);
  const auto c = solve_polynomial(wide);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->route, PolynomialRoute::kRatioAtLeastTwo);
  EXPECT_TRUE(c->outcome.value == 7);
  EXPECT_TRUE(evaluate(wide, c->outcome.solution) == 7);
  // [3,6] leads, then [1,2]: hi-sum 8 >= 7, lo-sum 4 <= 7
  EXPECT_TRUE(c->outcome.solution.values[1] == 0);

  EXPECT_FALSE(solve_polynomial(make({{10, 11}, {10, 11}}, 15)));
}

TEST(SolvePolynomial, LowerPrefixRoute) {
  // Sum of lo 12 > 10, ceil(4 / 3) * 4 = 8 <= 10, ratios 7/4 < 2.
  const Instance inst = make({{4, 7}, {4, 7}, {4, 7}}, 10);
  const auto out = solve_polynomial(inst);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->route, PolynomialRoute::kLowerPrefix);
  EXPECT_TRUE(out->outcome.value == 10);
  EXPECT_TRUE(out->outcome.solution.values[2] == 0);
}

TEST(SolvePolynomial, RequiresTargetBound) {
  EXPECT_THROW(solve_polynomial(make({{10, 20}}, 15)), Error);
}

Instance random_gap_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(1, 12);
  std::uniform_int_distribution<int> lo_dist(1, 12);
  std::uniform_int_distribution<int> len_dist(1, 20);
  const int n = n_dist(rng);
  std::vector<std::pair<Int, Int>> items;
  Int max_lo = 0, min_len = 1000, max_hi = 0;
  for (int i = 0; i < n; ++i) {
    const Int lo = lo_dist(rng), len = len_dist(rng);
    items.emplace_back(lo, lo + len);
    max_lo = std::max(max_lo, lo);
    min_len = std::min(min_len, len);
    max_hi = std::max(max_hi, lo + len);
  }
  const Int need = std::max(max_hi + 1, ceil_div(max_lo, min_len) * max_lo);
  std::uniform_int_distribution<int> extra(0, 60);
  return make(items, need + extra(rng));
}

Instance random_wide_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(1, 12);
  std::uniform_int_distribution<int> lo_dist(1, 15);
  std::uniform_int_distribution<int> extra(0, 10);
  const int n = n_dist(rng);
  std::vector<std::pair<Int, Int>> items;
  Int max_hi = 0, sum_hi = 0;
  for (int i = 0; i < n; ++i) {
    const Int lo = lo_dist(rng);
    const Int hi = 2 * lo + extra(rng);
    items.emplace_back(lo, hi);
    max_hi = std::max(max_hi, hi);
    sum_hi += hi;
  }
  std::uniform_int_distribution<std::int64_t> t(
      static_cast<std::int64_t>(max_hi + 1),
      static_cast<std::int64_t>(std::max(max_hi + 1, sum_hi + 5)));
  return make(items, t(rng));
}

TEST(SolvePolynomial, GapConditionInstancesMatchOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1500; ++trial) {
    const Instance inst = random_gap_instance(rng);
    ASSERT_TRUE(check_gap_condition(inst).holds);
    const auto out = solve_polynomial(inst);
    ASSERT_TRUE(out) << "trial " << trial;
    EXPECT_TRUE(out->outcome.value == testing::subset_optimum(inst));
    EXPECT_TRUE(evaluate(inst, out->outcome.solution) == out->outcome.value);
    EXPECT_LE(count_midrange(inst, out->outcome.solution), 1u);
    if (out->route != PolynomialRoute::kAllIntervals) {
      EXPECT_TRUE(out->outcome.value == inst.target);
    }
  }
}

TEST(SolvePolynomial, RatioTwoInstancesMatchOracle) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 1500; ++trial) {
    const Instance inst = random_wide_instance(rng);
    ASSERT_GE(min_ratio(inst), Rational(2));
    const auto out = solve_polynomial(inst);
    ASSERT_TRUE(out) << "trial " << trial;
    EXPECT_TRUE(out->outcome.value == testing::subset_optimum(inst));
    EXPECT_TRUE(evaluate(inst, out->outcome.solution) == out->outcome.value);
    if (out->route == PolynomialRoute::kRatioAtLeastTwo) {
      EXPECT_TRUE(out->outcome.value == inst.target);
    }
  }
}

TEST(SolvePolynomial, AnyAnswerIsOptimal) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 2000; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 40, 200);
    if (const auto out = solve_polynomial(inst)) {
      EXPECT_TRUE(out->outcome.value == testing::subset_optimum(inst));
    }
  }
}

}  // namespace
}  // namespace issp
