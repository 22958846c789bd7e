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

// Exact solvers: exhaustive enumeration over on/off subsets (plain and
// meet-in-the-middle), and the pseudo-polynomial reachable-sum dynamic
// program that scans for the single interval allowed to end strictly inside
// its range.

#ifndef ISSP_EXACT_HPP_
#define ISSP_EXACT_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "issp/analysis.hpp"
#include "issp/core.hpp"

namespace issp {

inline constexpr std::size_t kDefaultBruteForceCap = 25;
inline constexpr std::size_t kDefaultMeetInTheMiddleCap = 42;
inline constexpr std::size_t kDefaultMemoryBudgetBytes = 256u << 20;

namespace detail {

inline void require_target_bound(const Instance& inst, const char* who) {
  if (!inst.satisfies_target_bound()) {
    throw Error(ErrorCode::kPreconditionViolated,
                std::string(who) + " needs target > max hi (run preprocess)");
  }
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

inline SolveOutcome outcome_from_subset(const Instance& inst,
                                        const std::vector<std::size_t>& s) {
  SolveOutcome out;
  out.solution = solution_from_subset(inst, s);
  out.value = out.solution.total;
  out.kind = SolveKind::kExact;
  for (std::size_t p = 0; p < inst.size(); ++p) {
    Int x = out.solution.values[p];
    if (x > inst.intervals[p].lo && x < inst.intervals[p].hi) {
      out.midrange_index = p;
    }
  }
  return out;
}

}  // namespace detail

/// Enumerates all 2^n on/off choices (Gray-code order) and keeps the best
/// clipped value min(sum hi, T) among those with sum lo <= T.
inline SolveOutcome brute_force_optimum(
    const Instance& inst, std::size_t max_n = kDefaultBruteForceCap) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.size() > max_n || inst.size() >= 63) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "brute force limited to n <= " + std::to_string(max_n));
  }
  detail::require_target_bound(inst, "brute_force_optimum");
  const std::size_t n = inst.size();
  const Int t = inst.target;

  Int lo_sum = 0, hi_sum = 0, best = 0;
  std::uint64_t mask = 0, best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total && best < t; ++step) {
    const int bit = std::countr_zero(step);
    const auto& iv = inst.intervals[bit];
    mask ^= std::uint64_t{1} << bit;
    if (mask >> bit & 1) {
      lo_sum += iv.lo;
      hi_sum += iv.hi;
    } else {
      lo_sum -= iv.lo;
      hi_sum -= iv.hi;
    }
    if (lo_sum <= t) {
      Int v = std::min(hi_sum, t);
      if (v > best) {
        best = v;
        best_mask = mask;
      }
    }
  }

  std::vector<std::size_t> subset;
  for (std::size_t p = 0; p < n; ++p) {
    if (best_mask >> p & 1) subset.push_back(p);
  }
  SolveOutcome out = detail::outcome_from_subset(inst, subset);
  out.stats.elapsed_seconds = detail::seconds_since(start);
  return out;
}

/// Same optimum as brute_force_optimum in O(2^(n/2) n) time: the two halves
/// are enumerated separately and matched by lower-endpoint budget.
inline SolveOutcome meet_in_the_middle_optimum(
    const Instance& inst, std::size_t max_n = kDefaultMeetInTheMiddleCap) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.size() > max_n || inst.size() >= 63) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "meet-in-the-middle limited to n <= " + std::to_string(max_n));
  }
  detail::require_target_bound(inst, "meet_in_the_middle_optimum");
  const std::size_t n = inst.size();
  const std::size_t left_n = n / 2;
  const std::size_t right_n = n - left_n;
  const Int t = inst.target;

  struct Half {
    Int lo_sum;
    Int hi_sum;
    std::uint32_t mask;
  };
  auto enumerate = [&](std::size_t offset, std::size_t count) {
    std::vector<Half> out(std::size_t{1} << count);
    out[0] = {0, 0, 0};
    for (std::size_t b = 0; b < count; ++b) {
      const auto& iv = inst.intervals[offset + b];
      const std::size_t half = std::size_t{1} << b;
      for (std::size_t m = 0; m < half; ++m) {
        out[half + m] = {out[m].lo_sum + iv.lo, out[m].hi_sum + iv.hi,
                         static_cast<std::uint32_t>(half + m)};
      }
    }
    return out;
  };

  std::vector<Half> right = enumerate(left_n, right_n);
  std::sort(right.begin(), right.end(), [](const Half& a, const Half& b) {
    return a.lo_sum < b.lo_sum;
  });
  // Running best hi-sum over each lo-sum prefix.
  std::vector<std::size_t> best_upto(right.size());
  for (std::size_t k = 0; k < right.size(); ++k) {
    best_upto[k] = (k > 0 && right[best_upto[k - 1]].hi_sum >= right[k].hi_sum)
                       ? best_upto[k - 1]
                       : k;
  }

  const std::vector<Half> left = enumerate(0, left_n);
  Int best = -1;
  std::uint32_t best_left = 0, best_right = 0;
  for (const Half& a : left) {
    if (a.lo_sum > t) continue;
    auto it = std::upper_bound(
        right.begin(), right.end(), t - a.lo_sum,
        [](Int budget, const Half& h) { return budget < h.lo_sum; });
    if (it == right.begin()) continue;
    const Half& b = right[best_upto[static_cast<std::size_t>(
        it - right.begin() - 1)]];
    Int v = std::min(a.hi_sum + b.hi_sum, t);
    if (v > best) {
      best = v;
      best_left = a.mask;
      best_right = b.mask;
      if (best == t) break;
    }
  }

  std::vector<std::size_t> subset;
  for (std::size_t b = 0; b < left_n; ++b) {
    if (best_left >> b & 1) subset.push_back(b);
  }
  for (std::size_t b = 0; b < right_n; ++b) {
    if (best_right >> b & 1) subset.push_back(left_n + b);
  }
  SolveOutcome out = detail::outcome_from_subset(inst, subset);
  out.stats.elapsed_seconds = detail::seconds_since(start);
  return out;
}

/// Per-step record of the dynamic program, positions in length order.
struct DpTrace {
  // reachable[i] = sorted endpoint sums in (0, T] using intervals 0..i.
  std::vector<std::vector<Int>> reachable;
  // Position at which the target was reached and the scan stopped.
  std::optional<std::size_t> early_exit_at;
  // Largest reachable sum before the midrange interval that still leaves
  // room for its lower endpoint.
  Int best_prefix_sum = 0;
  // Position of the midrange candidate in length order.
  std::size_t midrange_sorted = 0;
  bool dense = false;
};

struct DpOptions {
  std::size_t memory_budget_bytes = kDefaultMemoryBudgetBytes;
  DpTrace* trace = nullptr;
  // Forces the sorted-array representation even when a bitset would fit.
  bool force_sparse = false;
};

namespace detail {

// Reachable sums as a bitset over [0, T]; first[v] is 1 + the position of
// the interval that made v reachable. Used when T is small enough.
template <typename Index>
class DenseReachable {
 public:
  DenseReachable(Int target, const std::vector<Interval>& items)
      : target_(static_cast<std::size_t>(target)),
        items_(items),
        words_(target_ / 64 + 1, 0),
        first_(target_ + 1, 0) {
    words_[0] = 1;  // empty sum
  }

  static std::size_t bytes_needed(Int target) {
    auto t = static_cast<std::size_t>(target);
    return (t + 1) * sizeof(Index) + (t / 64 + 1) * 8;
  }

  bool contains(std::size_t v) const { return words_[v / 64] >> (v % 64) & 1; }

  Int max_at_most(Int bound) const {
    if (bound < 0) return 0;
    std::size_t b = std::min(static_cast<std::size_t>(bound), target_);
    std::size_t w = b / 64;
    std::uint64_t word = words_[w];
    if (b % 64 != 63) word &= (std::uint64_t{1} << (b % 64 + 1)) - 1;
    while (word == 0) word = words_[--w];  // bit 0 is always set
    return static_cast<Int>(w * 64 + 63 - std::countl_zero(word));
  }

  void add_item(std::size_t pos) {
    const auto lo = static_cast<std::size_t>(items_[pos].lo);
    const auto hi = static_cast<std::size_t>(items_[pos].hi);
    const std::size_t top = std::min(target_, max_reach_ + hi);
    const std::size_t last_word = target_ / 64;
    for (std::size_t w = top / 64 + 1; w-- > 0;) {
      std::uint64_t fresh = (shifted(w, lo) | shifted(w, hi)) & ~words_[w];
      if (w == last_word && target_ % 64 != 63) {
        fresh &= (std::uint64_t{1} << (target_ % 64 + 1)) - 1;
      }
      words_[w] |= fresh;
      while (fresh != 0) {
        const int b = std::countr_zero(fresh);
        first_[w * 64 + b] = static_cast<Index>(pos + 1);
        fresh &= fresh - 1;
      }
    }
    max_reach_ = top == target_ ? static_cast<std::size_t>(
                                      max_at_most(static_cast<Int>(target_)))
                                : top;
  }

  // Follows first-reach positions down from `value`, writing endpoints.
  void backtrack(Int value, std::vector<Int>& x) const {
    auto v = static_cast<std::size_t>(value);
    while (v != 0) {
      const std::size_t pos = first_[v] - 1;
      const auto lo = static_cast<std::size_t>(items_[pos].lo);
      const auto hi = static_cast<std::size_t>(items_[pos].hi);
      auto reachable_before = [&](std::size_t u) {
        return u == 0 || (contains(u) && static_cast<std::size_t>(first_[u]) - 1 < pos);
      };
      if (v >= lo && reachable_before(v - lo)) {
        x[pos] = items_[pos].lo;
        v -= lo;
      } else {
        x[pos] = items_[pos].hi;
        v -= hi;
      }
    }
  }

  std::vector<Int> values() const {
    std::vector<Int> out;
    for (std::size_t v = 1; v <= target_; ++v) {
      if (contains(v)) out.push_back(static_cast<Int>(v));
    }
    return out;
  }

 private:
  // Word w of the set shifted up by s.
  std::uint64_t shifted(std::size_t w, std::size_t s) const {
    const std::size_t q = s / 64, r = s % 64;
    if (w < q) return 0;
    std::uint64_t out = words_[w - q] << r;
    if (r != 0 && w >= q + 1) out |= words_[w - q - 1] >> (64 - r);
    return out;
  }

  std::size_t target_;
  const std::vector<Interval>& items_;
  std::vector<std::uint64_t> words_;
  std::vector<Index> first_;
  std::size_t max_reach_ = 0;
};

// Reachable sums as a sorted array with per-value provenance. First
// insertion of a value wins.
class SparseReachable {
 public:
  struct Entry {
    Int value;
    Int predecessor;
    std::uint32_t pos;
    std::uint8_t endpoint;  // 1 = lo, 2 = hi
  };

  SparseReachable(Int target, const std::vector<Interval>& items,
                  std::size_t budget)
      : target_(target), items_(items), budget_(budget) {
    entries_.push_back({0, 0, std::numeric_limits<std::uint32_t>::max(), 0});
  }

  Int max_at_most(Int bound) const {
    auto it = std::upper_bound(
        entries_.begin(), entries_.end(), bound,
        [](Int b, const Entry& e) { return b < e.value; });
    return it == entries_.begin() ? 0 : std::prev(it)->value;
  }

  void add_item(std::size_t pos) {
    const Int lo = items_[pos].lo, hi = items_[pos].hi;
    const std::size_t max_entries =
        budget_ / (2 * sizeof(Entry));  // old and new arrays coexist
    std::vector<Entry> merged;
    merged.reserve(std::min(max_entries, entries_.size() * 3));
    std::size_t a = 0, b = 0, c = 0;
    const std::size_t n = entries_.size();
    const auto pos32 = static_cast<std::uint32_t>(pos);
    while (true) {
      Int va = a < n ? entries_[a].value : kIntMax;
      Int vb = b < n ? entries_[b].value + lo : kIntMax;
      Int vc = c < n ? entries_[c].value + hi : kIntMax;
      if (vb > target_) vb = kIntMax;
      if (vc > target_) vc = kIntMax;
      const Int v = std::min({va, vb, vc});
      if (v == kIntMax) break;
      if (va == v) {
        merged.push_back(entries_[a]);
      } else if (vb == v) {
        merged.push_back({v, entries_[b].value, pos32, 1});
      } else {
        merged.push_back({v, entries_[c].value, pos32, 2});
      }
      if (va == v) ++a;
      if (vb == v) ++b;
      if (vc == v) ++c;
      if (merged.size() > max_entries) {
        throw Error(ErrorCode::kMemoryBudgetExceeded,
                    "reachable set exceeds " + std::to_string(budget_) +
                        " bytes");
      }
    }
    entries_ = std::move(merged);
  }

  void backtrack(Int value, std::vector<Int>& x) const {
    while (value != 0) {
      auto it = std::lower_bound(
          entries_.begin(), entries_.end(), value,
          [](const Entry& e, Int v) { return e.value < v; });
      x[it->pos] = it->endpoint == 1 ? items_[it->pos].lo : items_[it->pos].hi;
      value = it->predecessor;
    }
  }

  std::vector<Int> values() const {
    std::vector<Int> out;
    for (std::size_t k = 1; k < entries_.size(); ++k) {
      out.push_back(entries_[k].value);
    }
    return out;
  }

 private:
  Int target_;
  const std::vector<Interval>& items_;
  std::size_t budget_;
  std::vector<Entry> entries_;
};

template <typename Store>
SolveOutcome run_dp(const Instance& sorted, Store& store, DpTrace* trace) {
  const Int t = sorted.target;
  const std::size_t n = sorted.size();
  Int best = 0, best_prefix = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& iv = sorted.intervals[i];
    const Int prefix = store.max_at_most(t - iv.lo);
    const Int candidate = std::min(prefix + iv.hi, t);
    if (candidate > best) {
      best = candidate;
      best_prefix = prefix;
      m = i;
    }
    if (best == t) {
      if (trace) trace->early_exit_at = i;
      break;
    }
    store.add_item(i);
    if (trace) trace->reachable.push_back(store.values());
  }

  SolveOutcome out;
  out.solution = Solution::zeros(n);
  store.backtrack(best_prefix, out.solution.values);
  out.solution.values[m] = std::min(sorted.intervals[m].hi, t - best_prefix);
  out.solution.total = best_prefix + out.solution.values[m];
  out.value = out.solution.total;
  out.kind = SolveKind::kExact;
  out.midrange_index = m;
  if (trace) {
    trace->best_prefix_sum = best_prefix;
    trace->midrange_sorted = m;
  }
  return out;
}

}  // namespace detail

/// Exact optimum via reachable endpoint sums. Intervals are scanned in
/// nondecreasing length; at step i the best value with interval i as the
/// possibly-midrange one is min(max{reachable <= T - lo_i} + hi_i, T). The
/// scan stops as soon as T itself is attainable. Positions in the returned
/// solution and midrange_index refer to `inst`.
inline SolveOutcome dp_exact(const Instance& inst, const DpOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_target_bound(inst, "dp_exact");
  if (inst.empty()) {
    SolveOutcome out;
    out.kind = SolveKind::kExact;
    return out;
  }
  const std::vector<std::size_t> perm = length_permutation(inst);
  const Instance sorted = permute(inst, perm);
  if (opts.trace) *opts.trace = DpTrace{};

  SolveOutcome out;
  const bool small_index = sorted.size() < 0xFFFF;
  const std::size_t dense_bytes =
      small_index
          ? detail::DenseReachable<std::uint16_t>::bytes_needed(sorted.target)
          : detail::DenseReachable<std::uint32_t>::bytes_needed(sorted.target);
  const bool dense = !opts.force_sparse &&
                     sorted.target < (static_cast<Int>(1) << 40) &&
                     dense_bytes <= opts.memory_budget_bytes;
  if (opts.trace) opts.trace->dense = dense;
  if (dense && small_index) {
    detail::DenseReachable<std::uint16_t> store(sorted.target,
                                                sorted.intervals);
    out = detail::run_dp(sorted, store, opts.trace);
  } else if (dense) {
    detail::DenseReachable<std::uint32_t> store(sorted.target,
                                                sorted.intervals);
    out = detail::run_dp(sorted, store, opts.trace);
  } else {
    detail::SparseReachable store(sorted.target, sorted.intervals,
                                  opts.memory_budget_bytes);
    out = detail::run_dp(sorted, store, opts.trace);
  }
  out.solution = unpermute(out.solution, perm);
  out.midrange_index = perm[*out.midrange_index];
  out.stats.elapsed_seconds = detail::seconds_since(start);
  return out;
}

}  // namespace issp

#endif  // ISSP_EXACT_HPP_
