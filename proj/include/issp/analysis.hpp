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

// Knapsack reformulation and the polynomially solvable subclasses.
//
// Switching interval i "on" costs at least lo_i of the budget and can
// contribute up to hi_i, so the best value is
//   max { min(sum_{i in S} hi_i, T) : sum_{i in S} lo_i <= T }
// over subsets S. That turns the problem into a 0-1 knapsack with weights lo
// and profits hi whose objective is clipped at the capacity.

#ifndef ISSP_ANALYSIS_HPP_
#define ISSP_ANALYSIS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "issp/core.hpp"

namespace issp {

struct KnapsackInstance {
  std::vector<Int> weights;
  std::vector<Int> profits;
  Int capacity = 0;

  std::size_t size() const { return weights.size(); }
};

inline KnapsackInstance to_knapsack(const Instance& inst) {
  KnapsackInstance kp;
  kp.capacity = inst.target;
  kp.weights.reserve(inst.size());
  kp.profits.reserve(inst.size());
  for (const auto& iv : inst.intervals) {
    kp.weights.push_back(iv.lo);
    kp.profits.push_back(iv.hi);
  }
  return kp;
}

/// Clipped knapsack objective min(profit, capacity), which is the ISSP value
/// of any feasible knapsack selection.
inline Int clipped_value(const KnapsackInstance& kp, Int profit) {
  return std::min(profit, kp.capacity);
}

/// Turns an on/off choice S (positions, any order) into interval values.
/// Members start at lo and are raised to hi one after another, in ascending
/// position, until the target is met; at most one member ends up strictly
/// inside its interval.
inline Solution solution_from_subset(const Instance& inst,
                                     std::span<const std::size_t> subset) {
  std::vector<std::size_t> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Int base = 0;
  for (std::size_t p : members) {
    if (p >= inst.size()) {
      throw Error(ErrorCode::kOutOfRange,
                  "subset position " + std::to_string(p) + " out of range");
    }
    base += inst.intervals[p].lo;
  }
  if (base > inst.target) {
    throw Error(ErrorCode::kSubsetInfeasible,
                "sum of lower endpoints " + to_string(base) + " > target");
  }

  Solution sol = Solution::zeros(inst.size());
  bool filled = false;
  for (std::size_t p : members) {
    const auto& iv = inst.intervals[p];
    if (filled) {
      sol.values[p] = iv.lo;
    } else if (base + iv.length() >= inst.target) {
      sol.values[p] = iv.lo + (inst.target - base);
      base = inst.target;
      filled = true;
    } else {
      sol.values[p] = iv.hi;
      base += iv.length();
    }
  }
  sol.total = base;
  return sol;
}

struct ConditionCheck {
  bool holds = false;
  // Set when the condition could not be evaluated (zero-length interval).
  std::optional<std::string> diagnostic;
};

/// T >= ceil(max lo / min(hi - lo)) * max lo. Wide-enough intervals make
/// the prefix construction in solve_polynomial succeed.
inline ConditionCheck check_gap_condition(const Instance& inst) {
  if (inst.empty()) return {false, "empty instance"};
  Int max_lo = 0;
  Int min_len = inst.intervals.front().length();
  for (const auto& iv : inst.intervals) {
    max_lo = std::max(max_lo, iv.lo);
    min_len = std::min(min_len, iv.length());
  }
  if (min_len == 0) {
    return {false, "DegenerateLength: an interval has hi == lo"};
  }
  return {inst.target >= ceil_div(max_lo, min_len) * max_lo, std::nullopt};
}

/// c* = min_i hi_i / lo_i.
inline Rational min_ratio(const Instance& inst) {
  if (inst.empty()) return Rational(0);
  Rational best(inst.intervals.front().hi, inst.intervals.front().lo);
  for (const auto& iv : inst.intervals) {
    best = std::min(best, Rational(iv.hi, iv.lo));
  }
  return best;
}

enum class PolynomialRoute {
  kAllIntervals,     // sum lo <= T
  kLowerPrefix,      // condition on T, max lo and min length
  kRatioAtLeastTwo,  // hi_i >= 2 lo_i for every i
};

inline const char* route_label(PolynomialRoute route) {
  switch (route) {
    case PolynomialRoute::kAllIntervals: return "a";
    case PolynomialRoute::kLowerPrefix: return "b";
    case PolynomialRoute::kRatioAtLeastTwo: return "c";
  }
  return "?";
}

struct PolynomialOutcome {
  SolveOutcome outcome;
  PolynomialRoute route;
};

namespace detail {

inline PolynomialOutcome exact_from_subset(const Instance& inst,
                                           std::span<const std::size_t> s,
                                           PolynomialRoute route) {
  PolynomialOutcome out{{}, route};
  out.outcome.solution = solution_from_subset(inst, s);
  out.outcome.value = out.outcome.solution.total;
  out.outcome.kind = SolveKind::kExact;
  for (std::size_t p = 0; p < inst.size(); ++p) {
    Int x = out.outcome.solution.values[p];
    if (x > inst.intervals[p].lo && x < inst.intervals[p].hi) {
      out.outcome.midrange_index = p;
    }
  }
  return out;
}

}  // namespace detail

/// Exact answer when the instance falls into one of the closed-form
/// subclasses; nullopt otherwise. Routes are tried in the order ratio,
/// all-intervals, lower-prefix. Requires T > max hi.
inline std::optional<PolynomialOutcome> solve_polynomial(const Instance& inst) {
  if (!inst.satisfies_target_bound()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "solve_polynomial needs target > max hi (run preprocess)");
  }
  if (inst.empty()) return std::nullopt;
  const Int t = inst.target;

  if (min_ratio(inst) >= Rational(2) && t <= inst.sum_hi()) {
    // Largest hi first, then the rest in current order; the shortest prefix
    // whose hi-sum reaches T always fits by lo-sum.
    std::size_t lead = 0;
    for (std::size_t p = 1; p < inst.size(); ++p) {
      if (inst.intervals[p].hi > inst.intervals[lead].hi) lead = p;
    }
    std::vector<std::size_t> prefix{lead};
    Int hi_sum = inst.intervals[lead].hi;
    Int lo_sum = inst.intervals[lead].lo;
    for (std::size_t p = 0; p < inst.size() && hi_sum < t; ++p) {
      if (p == lead) continue;
      prefix.push_back(p);
      hi_sum += inst.intervals[p].hi;
      lo_sum += inst.intervals[p].lo;
    }
    if (hi_sum < t || lo_sum > t) {
      throw Error(ErrorCode::kRouteViolation,
                  "ratio route: covering prefix has lo-sum " +
                      to_string(lo_sum) + " > target");
    }
    return detail::exact_from_subset(inst, prefix,
                                     PolynomialRoute::kRatioAtLeastTwo);
  }

  if (inst.sum_lo() <= t) {
    std::vector<std::size_t> all(inst.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
    return detail::exact_from_subset(inst, all, PolynomialRoute::kAllIntervals);
  }

  if (check_gap_condition(inst).holds) {
    std::vector<std::size_t> prefix;
    Int lo_sum = 0;
    Int hi_sum = 0;
    for (std::size_t p = 0; p < inst.size(); ++p) {
      if (lo_sum + inst.intervals[p].lo > t) break;
      lo_sum += inst.intervals[p].lo;
      hi_sum += inst.intervals[p].hi;
      prefix.push_back(p);
    }
    if (hi_sum <= t) {
      throw Error(ErrorCode::kRouteViolation,
                  "lower-prefix route: hi-sum " + to_string(hi_sum) +
                      " does not exceed target");
    }
    return detail::exact_from_subset(inst, prefix,
                                     PolynomialRoute::kLowerPrefix);
  }
  return std::nullopt;
}

}  // namespace issp

#endif  // ISSP_ANALYSIS_HPP_
