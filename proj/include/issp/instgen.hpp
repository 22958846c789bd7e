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

// Seedable generators for four benchmark families: two hard subset-sum
// constructions (A, B) and two random interval families (C with a fixed
// endpoint ratio, D with per-interval ratios).
//
// Random draws use SplitMix64 (Steele, Lea, Flood 2014) with the constants
// 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB. Bounded
// integers are drawn by rejection so they carry no modulo bias.

#ifndef ISSP_INSTGEN_HPP_
#define ISSP_INSTGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "issp/core.hpp"
#include "issp/rational.hpp"

namespace issp {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return next();
    const std::uint64_t range = span + 1;
    // 2^64 mod range; dropping draws below it leaves a multiple of range.
    const std::uint64_t reject = (0 - range) % range;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw < reject);
    return lo + draw % range;
  }

 private:
  std::uint64_t state_;
};

/// Mixes several words into one seed, so each (seed, cell, trial) gets its
/// own stream.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t acc = 0x6A09E667F3BCC909ULL;
  for (std::uint64_t p : parts) {
    SplitMix64 mix(acc ^ p);
    acc = mix.next();
  }
  return acc;
}

inline constexpr Int kRandomHiMax = 100'000'000'000'000;        // 1e14
inline constexpr Int kRandomTarget = 300'000'000'000'000;       // 3e14
inline constexpr Int kRatioDenominator = 1'000'000;
inline constexpr std::size_t kMaxFamilyAN = 62;

enum class Family { kA, kB, kC, kD };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::kA: return "A";
    case Family::kB: return "B";
    case Family::kC: return "C";
    case Family::kD: return "D";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::kA;
  if (s == "B" || s == "b") return Family::kB;
  if (s == "C" || s == "c") return Family::kC;
  if (s == "D" || s == "d") return Family::kD;
  return std::nullopt;
}

struct GenSpec {
  Family family = Family::kA;
  std::size_t n = 1;
  // Endpoint ratio hi/lo for C, or the upper bound of the per-interval
  // ratio for D. Unused by A and B.
  Rational ratio{2};
  std::uint64_t seed = 0;
};

namespace detail {

inline Instance make_instance(std::vector<Interval> intervals, Int target) {
  return validate(std::span<const Interval>(intervals), target);
}

inline Int random_hi(SplitMix64& rng) {
  return static_cast<Int>(
      rng.uniform(1, static_cast<std::uint64_t>(kRandomHiMax)));
}

}  // namespace detail

/// a_i = 2^(k+n+1) + 2^(k+i) + 1 with k = floor(log2 n), target half the
/// total (rounded down).
inline Instance gen_a(std::size_t n) {
  if (n < 1 || n > kMaxFamilyAN) {
    throw Error(ErrorCode::kNOutOfRange,
                "family A needs 1 <= n <= 62, got " + std::to_string(n));
  }
  std::size_t k = 0;
  while ((std::size_t{2} << k) <= n) ++k;
  const Int base = Int{1} << (k + n + 1);
  std::vector<Interval> items;
  Int total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Int a = base + (Int{1} << (k + i)) + 1;
    items.push_back({a, a});
    total += a;
  }
  return detail::make_instance(std::move(items), total / 2);
}

/// a_i = n(n+1) + i, target floor((n-1)/2) n(n+1) + n(n-1)/2.
inline Instance gen_b(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kNOutOfRange, "family B needs n >= 1");
  const Int nn = static_cast<Int>(n);
  std::vector<Interval> items;
  for (Int i = 1; i <= nn; ++i) items.push_back({nn * (nn + 1) + i, nn * (nn + 1) + i});
  const Int target = (nn - 1) / 2 * nn * (nn + 1) + nn * (nn - 1) / 2;
  if (target < 1) {
    // n = 1 gives target 0, which no instance may carry; 1 is the smallest
    // valid target and keeps every interval infeasible.
    return detail::make_instance(std::move(items), 1);
  }
  return detail::make_instance(std::move(items), target);
}

/// hi uniform in [1, 1e14], lo = max(1, floor(hi / ratio)), target 3e14.
inline Instance gen_c(std::size_t n, const Rational& ratio,
                      std::uint64_t seed) {
  if (ratio <= Rational(1)) {
    throw Error(ErrorCode::kPreconditionViolated, "family C needs ratio > 1");
  }
  SplitMix64 rng(seed);
  std::vector<Interval> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int hi = detail::random_hi(rng);
    const Int lo = std::max<Int>(1, hi * ratio.den() / ratio.num());
    items.push_back({lo, hi});
  }
  return detail::make_instance(std::move(items), kRandomTarget);
}

/// hi as in family C; each interval draws its own ratio r_i uniformly from
/// {1, 1 + 1e-6, ..., cap} and sets lo = max(1, floor(hi / r_i)).
inline Instance gen_d(std::size_t n, const Rational& cap, std::uint64_t seed) {
  if (cap <= Rational(1)) {
    throw Error(ErrorCode::kPreconditionViolated, "family D needs cap > 1");
  }
  const Int top = (cap * Rational(kRatioDenominator)).floor();
  SplitMix64 rng(seed);
  std::vector<Interval> items;
  items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int hi = detail::random_hi(rng);
    const Int num = static_cast<Int>(
        rng.uniform(static_cast<std::uint64_t>(kRatioDenominator),
                    static_cast<std::uint64_t>(top)));
    const Int lo = std::max<Int>(1, hi * kRatioDenominator / num);
    items.push_back({lo, hi});
  }
  return detail::make_instance(std::move(items), kRandomTarget);
}

inline Instance generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kA: return gen_a(spec.n);
    case Family::kB: return gen_b(spec.n);
    case Family::kC: return gen_c(spec.n, spec.ratio, spec.seed);
    case Family::kD: return gen_d(spec.n, spec.ratio, spec.seed);
  }
  throw Error(ErrorCode::kPreconditionViolated, "unknown family");
}

}  // namespace issp

#endif  // ISSP_INSTGEN_HPP_
