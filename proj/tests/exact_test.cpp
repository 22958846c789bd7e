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

#include "issp/exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace issp {
namespace {

using testing::make;
using testing::worked_example;

std::vector<Int> ints(std::initializer_list<int> v) {
  return {v.begin(), v.end()};
}

// Sorted-order structure of an exact solution: nonzero entries before the
// midrange candidate sit on an endpoint and everything after it is zero.
void expect_prefix_structure(const Instance& inst, const SolveOutcome& out) {
  ASSERT_TRUE(out.midrange_index);
  const Instance sorted = sort_by_length(inst);
  std::size_t m = sorted.size();
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    if (sorted.order[p] == *out.midrange_index) m = p;
  }
  ASSERT_LT(m, sorted.size());
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    const Int x = out.solution.values[sorted.order[p]];
    const Interval& iv = sorted.intervals[p];
    if (p < m) {
      EXPECT_TRUE(x == 0 || x == iv.lo || x == iv.hi);
    } else if (p > m) {
      EXPECT_TRUE(x == 0);
    }
  }
}

TEST(BruteForce, Examples) {
  EXPECT_TRUE(brute_force_optimum(worked_example()).value == 100);

  const auto single = brute_force_optimum(make({{5, 5}}, 7));
  EXPECT_TRUE(single.value == 5);
  EXPECT_EQ(single.solution.values, ints({5}));

  const auto pair = brute_force_optimum(make({{3, 5}, {4, 6}}, 9));
  EXPECT_TRUE(pair.value == 9);
  EXPECT_TRUE(pair.solution.values[0] != 0 && pair.solution.values[1] != 0);
  EXPECT_EQ(pair.kind, SolveKind::kExact);
}

TEST(BruteForce, SizeCap) {
  std::vector<std::pair<Int, Int>> items(26, {1, 1});
  const Instance inst = make(items, 100);
  try {
    brute_force_optimum(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  EXPECT_TRUE(brute_force_optimum(inst, 26).value == 26);
}

TEST(DpExact, WorkedExampleTrace) {
  DpTrace trace;
  DpOptions opts;
  opts.trace = &trace;
  const SolveOutcome out = dp_exact(worked_example(), opts);
  ASSERT_EQ(trace.reachable.size(), 2u);
  EXPECT_EQ(trace.reachable[0], ints({10, 20}));
  EXPECT_EQ(trace.reachable[1], ints({10, 20, 25, 30, 35, 45}));
  EXPECT_EQ(trace.early_exit_at, std::optional<std::size_t>(2));
  EXPECT_TRUE(trace.best_prefix_sum == 35);
  EXPECT_EQ(out.midrange_index, std::optional<std::size_t>(2));
  EXPECT_TRUE(out.value == 100);
  EXPECT_EQ(out.solution.values, ints({10, 25, 65, 0}));
  EXPECT_EQ(out.kind, SolveKind::kExact);
}

TEST(DpExact, SparseStoreGivesSameTrace) {
  DpTrace trace;
  DpOptions opts;
  opts.trace = &trace;
  opts.force_sparse = true;
  const SolveOutcome out = dp_exact(worked_example(), opts);
  EXPECT_FALSE(trace.dense);
  EXPECT_EQ(trace.reachable[1], ints({10, 20, 25, 30, 35, 45}));
  EXPECT_EQ(out.solution.values, ints({10, 25, 65, 0}));
}

TEST(DpExact, SingleItem) {
  DpTrace trace;
  DpOptions opts;
  opts.trace = &trace;
  const SolveOutcome out = dp_exact(make({{4, 4}}, 10), opts);
  EXPECT_EQ(trace.reachable.at(0), ints({4}));
  EXPECT_TRUE(out.value == 4);
  EXPECT_EQ(out.midrange_index, std::optional<std::size_t>(0));
  EXPECT_EQ(out.solution.values, ints({4}));
}

TEST(DpExact, EarlyExitOnSecondItem) {
  DpTrace trace;
  DpOptions opts;
  opts.trace = &trace;
  const SolveOutcome out = dp_exact(make({{2, 3}, {2, 3}}, 5), opts);
  EXPECT_TRUE(out.value == 5);
  EXPECT_EQ(trace.early_exit_at, std::optional<std::size_t>(1));
  EXPECT_TRUE(evaluate(make({{2, 3}, {2, 3}}, 5), out.solution) == 5);
}

TEST(DpExact, EmptyInstance) {
  Instance empty;
  empty.target = 3;
  const SolveOutcome out = dp_exact(empty);
  EXPECT_TRUE(out.value == 0);
  EXPECT_FALSE(out.midrange_index);
}

TEST(DpExact, RequiresTargetBound) {
  EXPECT_THROW(dp_exact(make({{10, 20}}, 15)), Error);
}

TEST(DpExact, MemoryBudget) {
  std::vector<std::pair<Int, Int>> items;
  for (int i = 1; i <= 20; ++i) items.emplace_back(1000 * i + i, 1000 * i + 7 * i);
  const Instance inst = make(items, 150000);
  DpOptions opts;
  opts.memory_budget_bytes = 4096;
  try {
    dp_exact(inst, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMemoryBudgetExceeded);
  }
}

TEST(DpExact, MatchesOraclesOnRandomInstances) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 3000; ++trial) {
    const Instance inst = testing::random_instance(rng, 12, 60, 300);
    const SolveOutcome dense = dp_exact(inst);
    DpOptions sparse_opts;
    sparse_opts.force_sparse = true;
    const SolveOutcome sparse = dp_exact(inst, sparse_opts);
    const Int oracle = testing::subset_optimum(inst);
    ASSERT_TRUE(dense.value == oracle) << "trial " << trial;
    ASSERT_TRUE(sparse.value == oracle) << "trial " << trial;
    ASSERT_TRUE(brute_force_optimum(inst).value == oracle);
    ASSERT_TRUE(meet_in_the_middle_optimum(inst).value == oracle);
    for (const SolveOutcome* out : {&dense, &sparse}) {
      ASSERT_TRUE(evaluate(inst, out->solution) == out->value);
      ASSERT_LE(count_midrange(inst, out->solution), 1u);
      expect_prefix_structure(inst, *out);
    }
  }
}

TEST(DpExact, MatchesValueEnumerationOnTinyInstances) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Instance inst = testing::random_instance(rng, 5, 10, 40);
    EXPECT_TRUE(dp_exact(inst).value == testing::direct_optimum(inst));
  }
}

TEST(DpExact, ReachableSetsMatchEnumeration) {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 40, 200);
    for (bool sparse : {false, true}) {
      DpTrace trace;
      DpOptions opts;
      opts.trace = &trace;
      opts.force_sparse = sparse;
      dp_exact(inst, opts);
      const Instance sorted = sort_by_length(inst);
      for (std::size_t i = 0; i < trace.reachable.size(); ++i) {
        std::vector<Interval> prefix(sorted.intervals.begin(),
                                     sorted.intervals.begin() + i + 1);
        const auto expected = testing::endpoint_sums(prefix, inst.target);
        ASSERT_EQ(trace.reachable[i],
                  std::vector<Int>(expected.begin(), expected.end()));
        if (i > 0) {
          ASSERT_TRUE(std::includes(
              trace.reachable[i].begin(), trace.reachable[i].end(),
              trace.reachable[i - 1].begin(), trace.reachable[i - 1].end()));
        }
      }
    }
  }
}

TEST(DpExact, EarlyExitExactlyWhenTargetReached) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 50, 250);
    DpTrace trace;
    DpOptions opts;
    opts.trace = &trace;
    const SolveOutcome out = dp_exact(inst, opts);
    EXPECT_EQ(trace.early_exit_at.has_value(), out.value == inst.target);
  }
}

TEST(MeetInTheMiddle, MatchesBruteForceUpToTwenty) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 20, 1000000, 5000000);
    const SolveOutcome mitm = meet_in_the_middle_optimum(inst);
    EXPECT_TRUE(mitm.value == brute_force_optimum(inst).value);
    EXPECT_TRUE(evaluate(inst, mitm.solution) == mitm.value);
  }
}

}  // namespace
}  // namespace issp
