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


#include "dcknap/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "dcknap/error.hpp"

namespace dcknap {

namespace {

BigInt pow10(int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

std::int64_t checked_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::kOutOfRange, "rational value exceeds 64-bit range");
  }
  return value.convert_to<std::int64_t>();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kInvalidParameter, "rational with zero denominator");
  }
  // The backing type requires a positive denominator.
  value_ = denominator < 0 ? Backing(-numerator, -denominator) : Backing(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::kInvalidParameter,
                "cannot parse rational from '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) return fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse(s.substr(0, slash));
    Rational den = parse(s.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer() || den.is_zero()) return fail();
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 4) return fail();
    exponent = std::stoi(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return fail();
  if (!int_part.empty() && !all_digits(int_part)) return fail();
  if (!frac_part.empty() && !all_digits(frac_part)) return fail();

  // cpp_int reads a leading zero as an octal prefix, so strip them.
  std::string digit_text = std::string(int_part) + std::string(frac_part);
  auto first = digit_text.find_first_not_of('0');
  digit_text = first == std::string::npos ? "0" : digit_text.substr(first);
  BigInt digits(digit_text);
  exponent -= static_cast<int>(frac_part.size());
  if (negative) digits = -digits;
  if (exponent >= 0) return Rational(BigInt(digits * pow10(exponent)), BigInt(1));
  return Rational(digits, pow10(-exponent));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidParameter, "non-finite value has no rational form");
  }
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 significant bits fit exactly in an int64 after scaling.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(num, den);
}

Rational Rational::from_decimal(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidParameter, "non-finite value has no rational form");
  }
  std::array<char, 64> buffer{};
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) {
    throw Error(ErrorKind::kInvalidParameter, "cannot format double");
  }
  return parse(std::string_view(buffer.data(), static_cast<std::size_t>(end - buffer.data())));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

int Rational::sign() const { return value_.sign(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::int64_t Rational::floor() const {
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return checked_int64(q);
}

std::int64_t Rational::ceil() const {
  return -(-*this).floor();
}

std::string Rational::to_fixed(int decimals) const {
  if (decimals < 0) decimals = 0;
  BigInt num = boost::multiprecision::abs(numerator());
  BigInt den = denominator();
  BigInt scale = pow10(decimals);
  // floor(|x| * 10^d + 1/2)
  BigInt rounded = (2 * num * scale + den) / (2 * den);
  std::string digits = rounded.str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  std::string out;
  if (sign() < 0 && rounded != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - static_cast<std::size_t>(decimals));
  if (decimals > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - static_cast<std::size_t>(decimals), std::string::npos);
  }
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::kInvalidParameter, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Backing(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace dcknap
