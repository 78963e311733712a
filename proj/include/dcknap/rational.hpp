// Copyright 2026 The dcknap Authors
//
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


#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dcknap {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
///
/// LP relaxation values and every efficiency percentage derived from them are
/// carried as Rational so that 2-decimal renderings are reproducible bit for
/// bit. Sums over many leaves grow the denominator well past 64 bits, hence
/// the arbitrary-precision backing.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic use
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "3", "-7/2", "0.35" or "1e-3" exactly.
  static Rational parse(std::string_view text);
  /// Exact value of a finite double (a dyadic rational).
  static Rational from_double(double value);
  /// Shortest decimal that round-trips to `value`, read back exactly. Turns
  /// 0.35 into 35/100 rather than the nearest dyadic.
  static Rational from_decimal(double value);

  BigInt numerator() const;
  BigInt denominator() const;

  bool is_integer() const;
  bool is_zero() const { return value_ == 0; }
  int sign() const;

  double to_double() const;
  /// Floor and ceiling as 64-bit integers; throws when out of range.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// Fixed-point rendering, rounding half away from zero.
  std::string to_fixed(int decimals = 2) const;
  /// "p/q", or "p" when integral.
  std::string to_string() const;

  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(Backing value) : value_(std::move(value)) {}

  Backing value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace dcknap
