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

// Space-efficient approximation scheme.
//
// The range (0, T] is cut into l = ceil(1/eps) equal buckets and only the
// smallest and largest reachable endpoint sum per bucket is kept, together
// with the interval and endpoint that last produced it. The forward pass
// locates the interval allowed to end strictly inside its range; the items
// before it are then recovered by recursive halving: each half gets its own
// bucket array, a pair of partial sums that together land within eps*T of
// the local target is chosen, and the halves are backtracked and recursed
// on with shrinking targets. Live memory stays O(n + 1/eps).

#ifndef ISSP_FPTAS_HPP_
#define ISSP_FPTAS_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "issp/core.hpp"
#include "issp/rational.hpp"

namespace issp {

// A local target, which need not be an integer: its value is scaled / q
// where q is the denominator of epsilon. Targets built as "sum + eps*T" and
// then reduced by integer sums are always of this form.
struct LocalTarget {
  Int scaled = 0;
  friend bool operator==(const LocalTarget&, const LocalTarget&) = default;
};

// epsilon = p/q, global target T, bucket count l = ceil(q/p) and bucket
// width T/l <= eps*T. All comparisons against eps*T are integer
// cross-multiplications.
class FptasParams {
 public:
  static constexpr Int kMaxEpsilonDenominator = 1'000'000'000;

  FptasParams(Int target, Rational epsilon)
      : epsilon_(epsilon), target_(target) {
    if (epsilon <= Rational(0) || epsilon >= Rational(1)) {
      throw Error(ErrorCode::kEpsilonOutOfRange,
                  "epsilon " + epsilon.to_string() + " not in (0, 1)");
    }
    if (epsilon.den() > kMaxEpsilonDenominator) {
      throw Error(ErrorCode::kEpsilonOutOfRange,
                  "epsilon denominator above 1e9");
    }
    if (target < 1) {
      throw Error(ErrorCode::kPreconditionViolated, "target must be >= 1");
    }
    buckets_ = ceil_div(epsilon.den(), epsilon.num());
    const Int limit = static_cast<Int>(~std::uint64_t{0});
    narrow_ = target_ <= limit / buckets_;
  }

  const Rational& epsilon() const { return epsilon_; }
  Int target() const { return target_; }
  Int buckets() const { return buckets_; }
  Rational width() const { return Rational(target_, buckets_); }

  /// x > eps*T
  bool exceeds_eps_t(Int x) const {
    return x > 0 && x * epsilon_.den() > epsilon_.num() * target_;
  }
  /// x >= eps*T
  bool at_least_eps_t(Int x) const {
    return x * epsilon_.den() >= epsilon_.num() * target_;
  }
  /// target - eps*T <= s <= target
  bool within_window(Int s, Int target) const {
    return s <= target && !exceeds_eps_t(target - s);
  }
  Int eps_t_floor() const {
    return epsilon_.num() * target_ / epsilon_.den();
  }

  LocalTarget exact(Int v) const { return {v * epsilon_.den()}; }
  /// v + eps*T
  LocalTarget plus_eps_t(Int v) const {
    return {v * epsilon_.den() + epsilon_.num() * target_};
  }
  LocalTarget minus(LocalTarget t, Int v) const {
    return {t.scaled - v * epsilon_.den()};
  }
  Int floor(LocalTarget t) const { return floor_div(t.scaled, epsilon_.den()); }
  Rational value(LocalTarget t) const { return Rational(t.scaled, epsilon_.den()); }
  /// s <= t
  bool fits(Int s, LocalTarget t) const { return s * epsilon_.den() <= t.scaled; }
  /// t - s > eps*T
  bool gap_exceeds_eps_t(LocalTarget t, Int s) const {
    return t.scaled - s * epsilon_.den() > epsilon_.num() * target_;
  }

  /// 1-based bucket holding v: ceil(v * l / T).
  Int bucket_of(Int v) const {
    if (narrow_) {
      auto vv = static_cast<std::uint64_t>(v);
      auto ll = static_cast<std::uint64_t>(buckets_);
      auto tt = static_cast<std::uint64_t>(target_);
      return static_cast<Int>((vv * ll + tt - 1) / tt);
    }
    return ceil_div(v * buckets_, target_);
  }

  /// Buckets needed to cover (0, local_target].
  std::size_t buckets_for(Int local_target) const {
    if (local_target <= 0) return 0;
    return static_cast<std::size_t>(bucket_of(local_target));
  }

 private:
  Rational epsilon_;
  Int target_;
  Int buckets_ = 1;
  bool narrow_ = false;  // T * l fits in 64 bits
};

/// Bucket index k with v in ((k-1) T/l, k T/l]; requires 0 < v <= T.
inline Int bucket_index(Int v, const FptasParams& params) {
  if (v <= 0 || v > params.target()) {
    throw Error(ErrorCode::kOutOfRange,
                "value " + to_string(v) + " outside (0, T]");
  }
  return params.bucket_of(v);
}

struct BucketSlot {
  Int value = 0;  // 0 = empty
  std::uint32_t item = 0;
  std::uint8_t endpoint = 0;  // 1 = lo, 2 = hi

  bool empty() const { return value == 0; }
};

struct Bucket {
  BucketSlot min;
  BucketSlot max;
};

// Hands out bucket buffers of capacity l and takes them back, so the
// recursion reuses a constant number of them. Tracks the peak number of
// buffers alive at once.
class SlotArena {
 public:
  explicit SlotArena(std::size_t capacity) : capacity_(capacity) {}

  std::vector<Bucket> take() {
    ++live_;
    peak_ = std::max(peak_, live_);
    if (free_.empty()) return std::vector<Bucket>(capacity_);
    std::vector<Bucket> out = std::move(free_.back());
    free_.pop_back();
    return out;
  }
  void give_back(std::vector<Bucket>&& buffer) {
    --live_;
    free_.push_back(std::move(buffer));
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t live_buffers() const { return live_; }
  std::size_t peak_buffers() const { return peak_; }
  /// Two slots per bucket.
  std::size_t peak_slots() const { return peak_ * capacity_ * 2; }

 private:
  std::size_t capacity_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
  std::vector<std::vector<Bucket>> free_;
};

// Min/max slots for buckets 1..count covering (0, local_target]. Buffers come
// from a SlotArena when one is given and are returned on destruction.
class BucketArray {
 public:
  BucketArray(const FptasParams& params, Int local_target,
              SlotArena* arena = nullptr)
      : params_(&params),
        local_target_(local_target),
        count_(params.buckets_for(local_target)),
        arena_(arena) {
    if (arena_) {
      buckets_ = arena_->take();
      if (buckets_.size() < count_) buckets_.resize(count_);
    } else {
      buckets_.resize(count_);
    }
    std::fill_n(buckets_.begin(), count_, Bucket{});
  }
  BucketArray(const BucketArray&) = delete;
  BucketArray& operator=(const BucketArray&) = delete;
  BucketArray(BucketArray&& other) noexcept
      : params_(other.params_),
        local_target_(other.local_target_),
        count_(other.count_),
        arena_(std::exchange(other.arena_, nullptr)),
        buckets_(std::move(other.buckets_)) {}
  BucketArray& operator=(BucketArray&&) = delete;
  ~BucketArray() {
    if (arena_) arena_->give_back(std::move(buckets_));
  }

  const FptasParams& params() const { return *params_; }
  Int local_target() const { return local_target_; }
  std::size_t size() const { return count_; }

  /// 1-based.
  const Bucket& bucket(std::size_t k) const { return buckets_[k - 1]; }

  /// Offers a candidate sum produced by endpoint `endpoint` of `item`.
  void offer(Int v, std::uint32_t item, std::uint8_t endpoint) {
    if (v <= 0 || v > local_target_) return;
    Bucket& b = buckets_[static_cast<std::size_t>(params_->bucket_of(v)) - 1];
    if (b.min.empty() || v < b.min.value) b.min = {v, item, endpoint};
    if (b.max.empty() || v > b.max.value) b.max = {v, item, endpoint};
  }

  /// Adds one interval: every stored sum plus either endpoint, and each
  /// endpoint alone. Sources are read before their bucket can change, and
  /// candidates only move upward, so no sum uses the interval twice.
  void add_interval(const Interval& iv, std::uint32_t item) {
    for (std::size_t k = count_; k >= 1; --k) {
      const Bucket b = buckets_[k - 1];
      if (b.min.empty()) continue;
      offer(b.min.value + iv.lo, item, 1);
      offer(b.max.value + iv.lo, item, 1);
      offer(b.min.value + iv.hi, item, 2);
      offer(b.max.value + iv.hi, item, 2);
    }
    offer(iv.lo, item, 1);
    offer(iv.hi, item, 2);
  }

  /// Largest stored value <= bound, or 0.
  Int max_at_most(Int bound) const {
    const BucketSlot* slot = max_slot_at_most(bound);
    return slot ? slot->value : 0;
  }

  const BucketSlot* max_slot_at_most(Int bound) const {
    if (bound <= 0 || count_ == 0) return nullptr;
    std::size_t k = bound >= local_target_
                        ? count_
                        : static_cast<std::size_t>(params_->bucket_of(bound));
    const Bucket& top = buckets_[k - 1];
    if (!top.max.empty() && top.max.value <= bound) return &top.max;
    if (!top.min.empty() && top.min.value <= bound) return &top.min;
    for (--k; k >= 1; --k) {
      const Bucket& b = buckets_[k - 1];
      if (!b.max.empty()) return &b.max;
    }
    return nullptr;
  }

  /// Stored values in ascending order (a bucket with min == max appears
  /// twice).
  std::vector<Int> values() const {
    std::vector<Int> out;
    for (std::size_t k = 0; k < count_; ++k) {
      if (buckets_[k].min.empty()) continue;
      out.push_back(buckets_[k].min.value);
      out.push_back(buckets_[k].max.value);
    }
    return out;
  }

  std::vector<Bucket> snapshot() const {
    return {buckets_.begin(), buckets_.begin() + count_};
  }

 private:
  const FptasParams* params_;
  Int local_target_;
  std::size_t count_;
  SlotArena* arena_;
  std::vector<Bucket> buckets_;
};

/// Bucket array over `items` (positions into `intervals`, ascending) with
/// local target `local_target`.
inline BucketArray relaxed_dp(std::span<const Interval> intervals,
                              std::span<const std::size_t> items,
                              Int local_target, const FptasParams& params,
                              SlotArena* arena = nullptr) {
  BucketArray out(params, local_target, arena);
  for (std::size_t pos : items) {
    out.add_interval(intervals[pos], static_cast<std::uint32_t>(pos));
  }
  return out;
}

/// Two-pointer sweep for u1 in {0} u b1 and u2 in {0} u b2 with
/// target - eps*T <= u1 + u2 <= target. u1 starts at 0 and grows, u2 starts
/// at the largest value and shrinks.
inline std::pair<Int, Int> find_u1_u2(const BucketArray& b1,
                                      const BucketArray& b2, LocalTarget target,
                                      const FptasParams& params) {
  std::vector<Int> first = b1.values();
  std::vector<Int> second = b2.values();
  first.insert(first.begin(), 0);
  second.insert(second.begin(), 0);
  std::size_t i = 0;
  std::size_t j = second.size() - 1;
  while (true) {
    const Int sum = first[i] + second[j];
    if (!params.fits(sum, target)) {
      if (j == 0) break;
      --j;
    } else if (params.gap_exceeds_eps_t(target, sum)) {
      if (++i == first.size()) break;
    } else {
      return {first[i], second[j]};
    }
  }
  throw Error(ErrorCode::kNoPairFound, "no pair within eps*T below " +
                                           params.value(target).to_string());
}

inline std::pair<Int, Int> find_u1_u2(const BucketArray& b1,
                                      const BucketArray& b2, Int target,
                                      const FptasParams& params) {
  return find_u1_u2(b1, b2, params.exact(target), params);
}

struct BacktrackResult {
  Int y = 0;
  // Removed items: every given item at position >= the last one traced.
  std::vector<std::size_t> removed;
  std::vector<std::size_t> kept;
  std::vector<std::pair<std::size_t, Int>> assignments;
};

/// Follows provenance from the largest stored value <= target. After each
/// step the residual is replaced by a same-bucket stored value built only
/// from earlier items, if one keeps the total within the window; otherwise
/// the trace stops.
inline BacktrackResult backtrack(const BucketArray& b,
                                 std::span<const Interval> intervals,
                                 std::span<const std::size_t> items,
                                 LocalTarget target,
                                 const FptasParams& params) {
  const BucketSlot* slot = b.max_slot_at_most(params.floor(target));
  if (slot == nullptr) {
    throw Error(ErrorCode::kEmptyArray, "no stored value <= " +
                                            params.value(target).to_string());
  }
  BacktrackResult out;
  Int u = slot->value;
  std::size_t last = 0;
  while (true) {
    const std::size_t i = slot->item;
    const Interval& iv = intervals[i];
    const Int a = slot->endpoint == 1 ? iv.lo : iv.hi;
    out.assignments.emplace_back(i, a);
    out.y += a;
    u -= a;
    last = i;
    if (u <= 0) break;
    const Bucket& bk = b.bucket(static_cast<std::size_t>(params.bucket_of(u)));
    if (!bk.max.empty() && params.fits(bk.max.value + out.y, target) &&
        bk.max.item < i) {
      slot = &bk.max;
    } else if (!bk.min.empty() &&
               !params.gap_exceeds_eps_t(target, bk.min.value + out.y) &&
               bk.min.item < i) {
      slot = &bk.min;
    } else {
      break;
    }
    u = slot->value;
  }
  for (std::size_t pos : items) {
    (pos >= last ? out.removed : out.kept).push_back(pos);
  }
  return out;
}

inline BacktrackResult backtrack(const BucketArray& b,
                                 std::span<const Interval> intervals,
                                 std::span<const std::size_t> items,
                                 Int target, const FptasParams& params) {
  return backtrack(b, intervals, items, params.exact(target), params);
}

// One divide-and-conquer call, recorded for inspection.
struct DcEvent {
  std::size_t depth = 0;
  std::size_t items = 0;
  Rational target;
  Int u1 = 0, u2 = 0;
  Int y1_backtrack = 0, y1_recursive = 0;
  Int y2_backtrack = 0, y2_recursive = 0;
  bool first_backtracked = false;
  bool second_backtracked = false;
};

namespace detail {

class DivideAndConquer {
 public:
  DivideAndConquer(std::span<const Interval> intervals,
                   const FptasParams& params, SlotArena& arena,
                   std::vector<Int>& x, std::vector<DcEvent>* events)
      : intervals_(intervals),
        params_(params),
        arena_(arena),
        x_(x),
        events_(events) {}

  Int run(std::span<const std::size_t> items, LocalTarget target,
          std::size_t depth = 1) {
    ++calls_;
    max_depth_ = std::max(max_depth_, depth);
    DcEvent ev;
    ev.depth = depth;
    ev.items = items.size();
    ev.target = params_.value(target);
    std::size_t event_slot = 0;
    if (events_) {
      event_slot = events_->size();
      events_->push_back(ev);
    }

    const std::size_t half = (items.size() + 1) / 2;
    const auto first = items.first(half);
    const auto second = items.subspan(half);
    const Int cap = params_.floor(target);

    Int u1 = 0, u2 = 0;
    Int y1b = 0, y1dc = 0, y2b = 0, y2dc = 0;
    std::vector<std::size_t> rest;
    {
      BucketArray b1 = relaxed_dp(intervals_, first, cap, params_, &arena_);
      {
        BucketArray b2 = relaxed_dp(intervals_, second, cap, params_, &arena_);
        std::tie(u1, u2) = find_u1_u2(b1, b2, target, params_);
      }
      if (params_.gap_exceeds_eps_t(target, u2)) {
        BacktrackResult r = backtrack(b1, intervals_, first,
                                      params_.minus(target, u2), params_);
        assign(r);
        y1b = r.y;
        rest = std::move(r.kept);
        ev.first_backtracked = true;
      }
    }
    if (params_.gap_exceeds_eps_t(target, u2 + y1b)) {
      y1dc = run(rest, params_.minus(target, u2 + y1b), depth + 1);
    }
    rest.clear();
    const LocalTarget second_target = params_.minus(target, y1b + y1dc);
    if (params_.gap_exceeds_eps_t(second_target, 0)) {
      BucketArray b2 = relaxed_dp(intervals_, second,
                                  params_.floor(second_target), params_,
                                  &arena_);
      BacktrackResult r =
          backtrack(b2, intervals_, second, second_target, params_);
      assign(r);
      y2b = r.y;
      rest = std::move(r.kept);
      ev.second_backtracked = true;
    }
    if (params_.gap_exceeds_eps_t(second_target, y2b)) {
      y2dc = run(rest, params_.minus(second_target, y2b), depth + 1);
    }

    if (events_) {
      ev.u1 = u1;
      ev.u2 = u2;
      ev.y1_backtrack = y1b;
      ev.y1_recursive = y1dc;
      ev.y2_backtrack = y2b;
      ev.y2_recursive = y2dc;
      (*events_)[event_slot] = ev;
    }
    return y1b + y1dc + y2b + y2dc;
  }

  std::size_t calls() const { return calls_; }
  std::size_t max_depth() const { return max_depth_; }

 private:
  void assign(const BacktrackResult& r) {
    for (auto [pos, value] : r.assignments) {
      if (x_[pos] != 0) {
        throw Error(ErrorCode::kPreconditionViolated,
                    "interval " + std::to_string(pos) + " assigned twice");
      }
      x_[pos] = value;
    }
  }

  std::span<const Interval> intervals_;
  const FptasParams& params_;
  SlotArena& arena_;
  std::vector<Int>& x_;
  std::vector<DcEvent>* events_;
  std::size_t calls_ = 0;
  std::size_t max_depth_ = 0;
};

}  // namespace detail

struct DcResult {
  Int y_dc = 0;
  std::vector<std::pair<std::size_t, Int>> assignments;
  std::vector<std::size_t> removed;
  std::size_t calls = 0;
  std::size_t max_depth = 0;
};

/// Recovers a subset of `items` (ascending positions) whose endpoint sum y
/// satisfies target - eps*T <= y <= target, given that such a
/// reachable sum exists.
inline DcResult divide_and_conquer(std::span<const Interval> intervals,
                                   std::span<const std::size_t> items,
                                   LocalTarget target,
                                   const FptasParams& params,
                                   SlotArena* arena = nullptr,
                                   std::vector<DcEvent>* events = nullptr) {
  SlotArena local(static_cast<std::size_t>(params.buckets()));
  SlotArena& use = arena ? *arena : local;
  std::vector<Int> x(intervals.size(), 0);
  detail::DivideAndConquer dc(intervals, params, use, x, events);
  DcResult out;
  out.y_dc = dc.run(items, target);
  out.calls = dc.calls();
  out.max_depth = dc.max_depth();
  for (std::size_t pos : items) {
    if (x[pos] != 0) {
      out.assignments.emplace_back(pos, x[pos]);
      out.removed.push_back(pos);
    }
  }
  return out;
}

inline DcResult divide_and_conquer(std::span<const Interval> intervals,
                                   std::span<const std::size_t> items,
                                   Int target, const FptasParams& params,
                                   SlotArena* arena = nullptr,
                                   std::vector<DcEvent>* events = nullptr) {
  return divide_and_conquer(intervals, items, params.exact(target), params,
                            arena, events);
}

// Forward-pass and reconstruction details, positions in length order.
struct FptasTrace {
  // Bucket contents after each processed interval.
  std::vector<std::vector<Bucket>> states;
  std::optional<std::size_t> early_exit_at;
  std::size_t midrange_sorted = 0;
  Int best_value = 0;        // best min(prefix + hi_m, T) seen in the scan
  Int best_prefix_sum = 0;   // prefix sum paired with the midrange interval
  Rational dc_target;
  Int dc_value = 0;
  bool certified_exact = false;
  std::vector<DcEvent> dc_events;
};

struct FptasOptions {
  FptasTrace* trace = nullptr;
};

/// (1 - eps)-approximate solution. Positions in the returned solution and
/// midrange_index refer to `inst`; requires T > max hi.
inline SolveOutcome fptas_solve(const Instance& inst, const Rational& epsilon,
                                const FptasOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const FptasParams params(inst.target, epsilon);
  if (!inst.satisfies_target_bound()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "fptas_solve needs target > max hi (run preprocess)");
  }
  SolveOutcome out;
  out.epsilon = epsilon;
  if (inst.empty()) {
    out.kind = SolveKind::kExact;
    return out;
  }
  FptasTrace* trace = opts.trace;
  if (trace) *trace = FptasTrace{};

  const std::vector<std::size_t> perm = length_permutation(inst);
  const Instance sorted = permute(inst, perm);
  const std::span<const Interval> intervals(sorted.intervals);
  const Int t = sorted.target;
  SlotArena arena(static_cast<std::size_t>(params.buckets()));

  Int best = 0, best_prefix = 0;
  std::size_t m = 0;
  {
    BucketArray main(params, t, &arena);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const Interval& iv = intervals[i];
      const Int prefix = main.max_at_most(t - iv.lo);
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
      main.add_interval(iv, static_cast<std::uint32_t>(i));
      if (trace) trace->states.push_back(main.snapshot());
    }
  }

  const Int lo_m = intervals[m].lo;
  // best_prefix + eps*T <= T - lo_m
  const bool certified = params.at_least_eps_t(t - lo_m - best_prefix);
  const LocalTarget dc_target = certified ? params.plus_eps_t(best_prefix)
                                          : params.exact(t - lo_m);

  std::vector<Int> x(sorted.size(), 0);
  std::size_t dc_calls = 0, dc_depth = 0;
  Int y = 0;
  if (m > 0) {
    std::vector<std::size_t> items(m);
    for (std::size_t p = 0; p < m; ++p) items[p] = p;
    detail::DivideAndConquer dc(intervals, params, arena, x,
                                trace ? &trace->dc_events : nullptr);
    y = dc.run(items, dc_target);
    dc_calls = dc.calls();
    dc_depth = dc.max_depth();
  }
  x[m] = std::min(intervals[m].hi, t - y);

  Solution sol{std::move(x), y + std::min(intervals[m].hi, t - y)};
  out.solution = unpermute(sol, perm);
  out.value = sol.total;
  out.kind = certified ? SolveKind::kExact : SolveKind::kApproximate;
  out.midrange_index = perm[m];
  out.stats.peak_bucket_slots = arena.peak_slots();
  out.stats.dc_calls = dc_calls;
  out.stats.max_dc_depth = dc_depth;
  out.stats.elapsed_seconds = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
  if (trace) {
    trace->midrange_sorted = m;
    trace->best_value = best;
    trace->best_prefix_sum = best_prefix;
    trace->dc_target = params.value(dc_target);
    trace->dc_value = y;
    trace->certified_exact = certified;
  }
  return out;
}

}  // namespace issp

#endif  // ISSP_FPTAS_HPP_
