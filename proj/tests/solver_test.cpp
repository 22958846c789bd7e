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

#include "issp/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace issp {
namespace {

using testing::make;
using testing::worked_example;

SolveRequest request(Algorithm a, std::optional<Rational> eps = std::nullopt) {
  SolveRequest req;
  req.algorithm = a;
  req.epsilon = eps;
  return req;
}

std::vector<Int> ints(std::initializer_list<int> v) {
  return {v.begin(), v.end()};
}

TEST(Solve, WorkedExampleEachAlgorithm) {
  const Instance w = worked_example();
  const SolveReport dp = solve(w, request(Algorithm::kDp));
  EXPECT_TRUE(dp.value == 100);
  EXPECT_EQ(dp.x, ints({10, 25, 65, 0}));
  EXPECT_EQ(dp.method, "dp");
  EXPECT_EQ(dp.midrange_index, std::optional<std::size_t>(2));
  EXPECT_FALSE(dp.epsilon);

  const SolveReport f = solve(w, request(Algorithm::kFptas, Rational(1, 5)));
  EXPECT_TRUE(f.value == 100);
  EXPECT_EQ(f.x, ints({0, 25, 75, 0}));
  EXPECT_EQ(f.method, "fptas");
  EXPECT_EQ(f.kind, SolveKind::kApproximate);
  EXPECT_EQ(f.epsilon, std::optional<Rational>(Rational(1, 5)));

  const SolveReport b = solve(w, request(Algorithm::kBrute));
  EXPECT_TRUE(b.value == 100);
  EXPECT_EQ(b.method, "brute");

  const SolveReport a = solve(w, request(Algorithm::kAuto, Rational(1, 5)));
  EXPECT_TRUE(a.value == 100);
  EXPECT_EQ(a.method, "route-a");  // sum of lo = 100 <= T
}

TEST(Solve, EpsilonRules) {
  const Instance w = worked_example();
  EXPECT_THROW(solve(w, request(Algorithm::kFptas)), Error);
  EXPECT_THROW(solve(w, request(Algorithm::kAuto)), Error);
  EXPECT_THROW(solve(w, request(Algorithm::kDp, Rational(1, 2))), Error);
  try {
    solve(w, request(Algorithm::kFptas, Rational(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEpsilonOutOfRange);
  }
}

TEST(Solve, TargetInsideInterval) {
  const SolveReport r = solve(make({{1, 2}, {10, 20}}, 15), request(Algorithm::kDp));
  EXPECT_TRUE(r.value == 15);
  EXPECT_EQ(r.x, ints({0, 15}));
  EXPECT_EQ(r.method, "target-in-interval");
  EXPECT_EQ(r.midrange_index, std::optional<std::size_t>(1));
}

TEST(Solve, EverythingDropped) {
  const SolveReport r =
      solve(make({{7, 7}, {8, 8}}, 1), request(Algorithm::kFptas, Rational(1, 10)));
  EXPECT_TRUE(r.value == 0);
  EXPECT_EQ(r.x, ints({0, 0}));
  EXPECT_EQ(r.method, "empty");
  EXPECT_EQ(r.kind, SolveKind::kExact);
}

TEST(Solve, DroppedIntervalsReportedInInputOrder) {
  const Instance inst = make({{30, 40}, {5, 8}, {2, 3}}, 20);
  const SolveReport r = solve(inst, request(Algorithm::kDp));
  EXPECT_TRUE(r.value == 11);
  EXPECT_EQ(r.x, ints({0, 8, 3}));
}

TEST(Solve, AutoUsesRoutes) {
  const SolveReport a =
      solve(make({{3, 5}, {4, 6}}, 9), request(Algorithm::kAuto, Rational(1, 2)));
  EXPECT_EQ(a.method, "route-a");
  EXPECT_EQ(a.kind, SolveKind::kExact);
  EXPECT_FALSE(a.epsilon);
  const SolveReport c = solve(make({{1, 2}, {2, 4}, {3, 6}}, 7),
                              request(Algorithm::kAuto, Rational(1, 2)));
  EXPECT_EQ(c.method, "route-c");
  EXPECT_TRUE(c.value == 7);
}

TEST(Solve, AutoNeverWorseThanFptas) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1500; ++trial) {
    const Instance inst = testing::random_instance(rng, 12, 50, 300);
    for (const Rational& e : {Rational(1, 3), Rational(1, 20)}) {
      const SolveReport f = solve(inst, request(Algorithm::kFptas, e));
      const SolveReport a = solve(inst, request(Algorithm::kAuto, e));
      const SolveReport d = solve(inst, request(Algorithm::kDp));
      ASSERT_GE(a.value, f.value);
      ASSERT_LE(a.value, d.value);
      ASSERT_TRUE(d.value == testing::subset_optimum(inst));
      ASSERT_LE(count_midrange(inst, Solution{a.x, a.value}), 1u);
    }
  }
}

TEST(Solve, AlgorithmNames) {
  for (Algorithm a : {Algorithm::kFptas, Algorithm::kDp, Algorithm::kBrute,
                      Algorithm::kAuto}) {
    EXPECT_EQ(parse_algorithm(algorithm_name(a)), std::optional<Algorithm>(a));
  }
  EXPECT_FALSE(parse_algorithm("greedy"));
}

}  // namespace
}  // namespace issp
