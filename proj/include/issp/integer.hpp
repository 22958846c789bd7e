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

// 128-bit integer helpers. Every endpoint, target and partial sum in the
// toolkit is carried as Int so that n * max(hi) cannot wrap at the scales
// the random instance families reach (n = 1e5, hi <= 1e14).

#ifndef ISSP_INTEGER_HPP_
#define ISSP_INTEGER_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace issp {

__extension__ typedef __int128 Int;
__extension__ typedef unsigned __int128 UInt;

inline constexpr Int kIntMax = static_cast<Int>(
    (static_cast<UInt>(1) << 127) - 1);

/// Largest magnitude accepted for endpoints and targets. Keeps every sum of
/// up to 2^27 values and every product with a bucket count below 2^127.
inline constexpr Int kMaxMagnitude = static_cast<Int>(1) << 96;

constexpr Int abs_value(Int v) { return v < 0 ? -v : v; }

constexpr Int gcd(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Floor and ceiling division for a nonnegative numerator and positive
// denominator.
constexpr Int floor_div(Int num, Int den) { return num / den; }
constexpr Int ceil_div(Int num, Int den) { return (num + den - 1) / den; }

inline std::string to_string(Int v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work with the unsigned magnitude so INT128_MIN does not overflow.
  UInt mag = negative ? static_cast<UInt>(-(v + 1)) + 1
                                   : static_cast<UInt>(v);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

/// Parses an optionally signed base-10 integer. Returns nullopt on empty
/// input, stray characters or overflow.
inline std::optional<Int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return std::nullopt;
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    if (value > (kIntMax - (c - '0')) / 10) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

inline bool fits_int64(Int v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace issp

#endif  // ISSP_INTEGER_HPP_
