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

#ifndef ISSP_RATIONAL_HPP_
#define ISSP_RATIONAL_HPP_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "issp/integer.hpp"

namespace issp {

// Exact rational number with a positive denominator, always kept in lowest
// terms. Used for epsilon, width ratios and relative errors so that no
// threshold in the solver path depends on floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int num) : num_(num), den_(1) {}  // NOLINT
  constexpr Rational(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  constexpr Int num() const { return num_; }
  constexpr Int den() const { return den_; }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd(a.den_, b.den_);
    return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g),
                    a.den_ / g * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd(a.num_, b.den_);
    Int g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational((a.num_ / g1) * (b.num_ / g2),
                    (a.den_ / g2) * (b.den_ / g1));
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// floor(this) for the nonnegative values the toolkit uses.
  constexpr Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  constexpr Int ceil() const { return -Rational(-num_, den_).floor(); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", or just "p" when the denominator is one.
  std::string to_string() const {
    if (den_ == 1) return issp::to_string(num_);
    return issp::to_string(num_) + "/" + issp::to_string(den_);
  }

  /// Terminating decimal when the denominator only has factors 2 and 5,
  /// otherwise falls back to "p/q".
  std::string to_decimal_string() const {
    Int d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return to_string();
    int digits = twos > fives ? twos : fives;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    return format_fixed(num_ * (scale / den_), digits);
  }

  /// Renders 100 * value with `decimals` digits after the point, rounding
  /// half away from zero. Relative errors are only rounded here.
  std::string to_percent_string(int decimals = 3) const {
    Int scale = 100;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    Int scaled = num_ * scale;
    Int q = abs_value(scaled) / den_;
    Int r = abs_value(scaled) % den_;
    if (2 * r >= den_) ++q;
    return format_fixed(scaled < 0 ? -q : q, decimals) + "%";
  }

  /// Accepts "p/q", "p", or a plain decimal such as "0.001".
  static std::optional<Rational> parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      auto num = parse_int(text.substr(0, slash));
      auto den = parse_int(text.substr(slash + 1));
      if (!num || !den || *den == 0) return std::nullopt;
      return Rational(*num, *den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string digits(text.substr(0, dot));
      std::string_view frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 18) return std::nullopt;
      if (frac.front() == '+' || frac.front() == '-') return std::nullopt;
      digits += frac;
      if (digits.empty() || digits == "-" || digits == "+") digits += "0";
      auto num = parse_int(digits);
      if (!num) return std::nullopt;
      Int den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      return Rational(*num, den);
    }
    auto num = parse_int(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static std::string format_fixed(Int scaled, int decimals) {
    bool negative = scaled < 0;
    std::string digits = issp::to_string(abs_value(scaled));
    if (decimals > 0) {
      if (static_cast<int>(digits.size()) <= decimals) {
        digits.insert(0, decimals + 1 - digits.size(), '0');
      }
      digits.insert(digits.size() - decimals, ".");
    }
    return negative ? "-" + digits : digits;
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace issp

#endif  // ISSP_RATIONAL_HPP_
