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

// Domain types for the interval subset sum problem: choose at most one
// integer x_i from each interval [lo_i, hi_i] (or x_i = 0) so that the sum
// of the chosen values is as large as possible without exceeding a target.

#ifndef ISSP_CORE_HPP_
#define ISSP_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "issp/integer.hpp"
#include "issp/rational.hpp"

namespace issp {

enum class ErrorCode {
  kNonPositiveEndpoint,
  kInvertedInterval,
  kNonPositiveTarget,
  kValueTooLarge,
  kSizeMismatch,
  kValueOutsideInterval,
  kTargetExceeded,
  kNegativeGap,
  kPreconditionViolated,
  kInstanceTooLarge,
  kMemoryBudgetExceeded,
  kOutOfRange,
  kNoPairFound,
  kEmptyArray,
  kEpsilonOutOfRange,
  kSubsetInfeasible,
  kRouteViolation,
  kNOutOfRange,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveEndpoint: return "NonPositiveEndpoint";
    case ErrorCode::kInvertedInterval: return "InvertedInterval";
    case ErrorCode::kNonPositiveTarget: return "NonPositiveTarget";
    case ErrorCode::kValueTooLarge: return "ValueTooLarge";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kValueOutsideInterval: return "ValueOutsideInterval";
    case ErrorCode::kTargetExceeded: return "TargetExceeded";
    case ErrorCode::kNegativeGap: return "NegativeGap";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kMemoryBudgetExceeded: return "MemoryBudgetExceeded";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNoPairFound: return "NoPairFound";
    case ErrorCode::kEmptyArray: return "EmptyArray";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kSubsetInfeasible: return "SubsetInfeasible";
    case ErrorCode::kRouteViolation: return "RouteViolation";
    case ErrorCode::kNOutOfRange: return "NOutOfRange";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Interval {
  Int lo = 0;
  Int hi = 0;

  constexpr Int length() const { return hi - lo; }
  friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

// An interval list plus target. `order[p]` is the position in the original
// input of the interval now stored at position p; `original_size` is the
// length of that input, which may exceed intervals.size() after
// preprocessing dropped some of them.
struct Instance {
  std::vector<Interval> intervals;
  Int target = 0;
  std::vector<std::size_t> order;
  std::size_t original_size = 0;
  bool length_sorted = false;

  std::size_t size() const { return intervals.size(); }
  bool empty() const { return intervals.empty(); }

  Int max_hi() const {
    Int best = 0;
    for (const auto& iv : intervals) best = std::max(best, iv.hi);
    return best;
  }
  Int sum_lo() const {
    Int s = 0;
    for (const auto& iv : intervals) s += iv.lo;
    return s;
  }
  Int sum_hi() const {
    Int s = 0;
    for (const auto& iv : intervals) s += iv.hi;
    return s;
  }
  /// T > max hi.
  bool satisfies_target_bound() const { return target > max_hi(); }
};

// Chosen values in the instance's current order; 0 means "interval off".
struct Solution {
  std::vector<Int> values;
  Int total = 0;

  static Solution zeros(std::size_t n) { return {std::vector<Int>(n, 0), 0}; }
};

enum class SolveKind { kExact, kApproximate };

inline const char* to_string(SolveKind kind) {
  return kind == SolveKind::kExact ? "exact" : "approximate";
}

struct SolveStats {
  double elapsed_seconds = 0.0;
  // Peak number of bucket slots simultaneously allocated (FPTAS only).
  std::size_t peak_bucket_slots = 0;
  std::size_t dc_calls = 0;
  std::size_t max_dc_depth = 0;
};

struct SolveOutcome {
  Solution solution;
  Int value = 0;
  SolveKind kind = SolveKind::kExact;
  std::optional<Rational> epsilon;
  // Position (in the instance passed to the solver) of the interval that was
  // allowed to take a value strictly inside its range.
  std::optional<std::size_t> midrange_index;
  SolveStats stats;
};

/// Builds an Instance from raw (lo, hi) pairs, keeping input order.
inline Instance validate(std::span<const std::pair<Int, Int>> intervals,
                         Int target) {
  if (target < 1) {
    throw Error(ErrorCode::kNonPositiveTarget,
                "target " + to_string(target) + " must be at least 1");
  }
  if (target > kMaxMagnitude) {
    throw Error(ErrorCode::kValueTooLarge, "target exceeds 2^96");
  }
  Instance inst;
  inst.target = target;
  inst.intervals.reserve(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    auto [lo, hi] = intervals[i];
    const std::string where = "interval " + std::to_string(i + 1);
    if (lo < 1 || hi < 1) {
      throw Error(ErrorCode::kNonPositiveEndpoint,
                  where + " has an endpoint below 1");
    }
    if (lo > hi) {
      throw Error(ErrorCode::kInvertedInterval,
                  where + ": lo " + to_string(lo) + " > hi " + to_string(hi));
    }
    if (hi > kMaxMagnitude) {
      throw Error(ErrorCode::kValueTooLarge, where + " exceeds 2^96");
    }
    inst.intervals.push_back({lo, hi});
  }
  inst.order.resize(inst.intervals.size());
  std::iota(inst.order.begin(), inst.order.end(), std::size_t{0});
  inst.original_size = inst.intervals.size();
  return inst;
}

inline Instance validate(std::span<const Interval> intervals, Int target) {
  std::vector<std::pair<Int, Int>> raw;
  raw.reserve(intervals.size());
  for (const auto& iv : intervals) raw.emplace_back(iv.lo, iv.hi);
  return validate(raw, target);
}

struct ImmediateSolution {
  Solution solution;
  // Position of the interval whose range contains the target.
  std::size_t index = 0;
};

struct ReducedInstance {
  Instance instance;
  // Original input positions of the intervals that were removed.
  std::vector<std::size_t> dropped;
};

using PreprocessOutcome = std::variant<ImmediateSolution, ReducedInstance>;

/// Enforces T > max hi. Scanning in order, the first interval containing T
/// yields an optimal solution outright; intervals with lo > T are removed.
inline PreprocessOutcome preprocess(const Instance& inst) {
  const Int t = inst.target;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& iv = inst.intervals[i];
    if (iv.lo <= t && t <= iv.hi) {
      Solution sol = Solution::zeros(inst.size());
      sol.values[i] = t;
      sol.total = t;
      return ImmediateSolution{std::move(sol), i};
    }
  }
  ReducedInstance out;
  out.instance.target = t;
  out.instance.original_size = inst.original_size;
  out.instance.length_sorted = inst.length_sorted;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.intervals[i].lo > t) {
      out.dropped.push_back(inst.order[i]);
    } else {
      out.instance.intervals.push_back(inst.intervals[i]);
      out.instance.order.push_back(inst.order[i]);
    }
  }
  return out;
}

/// Stable permutation p with p[k] = position (in inst) of the k-th shortest
/// interval.
inline std::vector<std::size_t> length_permutation(const Instance& inst) {
  std::vector<std::size_t> perm(inst.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) {
                     return inst.intervals[a].length() <
                            inst.intervals[b].length();
                   });
  return perm;
}

/// Applies a permutation (new position -> old position), composing `order`.
inline Instance permute(const Instance& inst,
                        std::span<const std::size_t> perm) {
  Instance out;
  out.target = inst.target;
  out.original_size = inst.original_size;
  out.intervals.reserve(perm.size());
  out.order.reserve(perm.size());
  for (std::size_t p : perm) {
    out.intervals.push_back(inst.intervals[p]);
    out.order.push_back(inst.order[p]);
  }
  return out;
}

/// Reorders intervals by nondecreasing hi - lo (stable).
inline Instance sort_by_length(const Instance& inst) {
  Instance out = permute(inst, length_permutation(inst));
  out.length_sorted = true;
  return out;
}

inline bool is_length_sorted(const Instance& inst) {
  for (std::size_t i = 1; i < inst.size(); ++i) {
    if (inst.intervals[i - 1].length() > inst.intervals[i].length()) {
      return false;
    }
  }
  return true;
}

/// Objective value of `sol`; throws if it is not feasible for `inst`.
inline Int evaluate(const Instance& inst, const Solution& sol) {
  if (sol.values.size() != inst.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "solution has " + std::to_string(sol.values.size()) +
                    " entries, instance has " + std::to_string(inst.size()));
  }
  Int sum = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Int x = sol.values[i];
    const auto& iv = inst.intervals[i];
    if (x != 0 && (x < iv.lo || x > iv.hi)) {
      throw Error(ErrorCode::kValueOutsideInterval,
                  "x_" + std::to_string(i + 1) + " = " + to_string(x) +
                      " not in {0} u [" + to_string(iv.lo) + ", " +
                      to_string(iv.hi) + "]");
    }
    sum += x;
  }
  if (sum > inst.target) {
    throw Error(ErrorCode::kTargetExceeded,
                "sum " + to_string(sum) + " > target " +
                    to_string(inst.target));
  }
  return sum;
}

/// Number of entries strictly inside their interval.
inline std::size_t count_midrange(const Instance& inst, const Solution& sol) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < inst.size() && i < sol.values.size(); ++i) {
    const Int x = sol.values[i];
    if (x > inst.intervals[i].lo && x < inst.intervals[i].hi) ++count;
  }
  return count;
}

/// (reference - approx) / reference.
inline Rational relative_error(Int approx_value, Int reference_value) {
  if (reference_value <= 0 || approx_value < 0) {
    throw Error(ErrorCode::kPreconditionViolated,
                "relative error needs reference > 0 and approx >= 0");
  }
  if (approx_value > reference_value) {
    throw Error(ErrorCode::kNegativeGap,
                to_string(approx_value) + " exceeds reference " +
                    to_string(reference_value));
  }
  return Rational(reference_value - approx_value, reference_value);
}

/// Scatters a solution of `inst` back to original input positions; entries
/// for dropped intervals are zero.
inline std::vector<Int> to_input_order(const Instance& inst,
                                       const Solution& sol) {
  std::vector<Int> out(inst.original_size, 0);
  for (std::size_t p = 0; p < inst.size(); ++p) {
    out[inst.order[p]] = sol.values[p];
  }
  return out;
}

/// Moves a solution of a permuted instance (new -> old positions in `perm`)
/// back onto the unpermuted positions.
inline Solution unpermute(const Solution& sol,
                          std::span<const std::size_t> perm) {
  Solution out = Solution::zeros(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    out.values[perm[k]] = sol.values[k];
  }
  out.total = sol.total;
  return out;
}

}  // namespace issp

#endif  // ISSP_CORE_HPP_
