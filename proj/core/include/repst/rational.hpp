/*
   Copyright 2026 the repst authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic on top of GMP.
 *
 * Rational is the scalar type of the whole library: character values,
 * structure constants, diagram coefficients and multiplicities are all exact.
 * Unlike floating point, 1/3 stays exactly 1/3.
 *
 * Representation invariants (enforced on every construction path):
 *  - always reduced to lowest terms (coprime numerator and denominator),
 *  - denominator strictly positive (the sign lives in the numerator),
 *  - zero is uniquely 0/1.
 *
 * The heavy lifting is delegated to GMP's mpq_class, which maintains exactly
 * these invariants; this wrapper pins down construction, ordering, hashing
 * and printing so the rest of the library never touches GMP directly.
 */

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace repst {

/// Arbitrary-precision integer (GMP).
using Integer = mpz_class;

/// Returns n! as an arbitrary-precision integer. Requires n >= 0.
Integer factorial(int n);

class Rational {
 public:
  /// Zero.
  Rational() : value_(0) {}

  /// Integers embed implicitly; arithmetic like r + 1 should just work.
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : value_(n) {}

  /// num/den, canonicalized. Throws ErrorCode::InvalidArgument if den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p" or "p/q" (arbitrary precision).
  /// Throws ErrorCode::ParseError on anything else.
  static Rational parse(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// -1, 0, +1.
  int sign() const { return sgn(value_); }

  /// The value as an Integer. Throws ErrorCode::NotIntegral unless integral.
  Integer as_integer() const;

  /// The value as a long. Throws ErrorCode::NotIntegral unless integral and
  /// in range.
  long as_long() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Division; throws ErrorCode::InvalidArgument on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) {
    return !(lhs == rhs);
  }
  friend bool operator<(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) < 0;
  }
  friend bool operator<=(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <= 0;
  }
  friend bool operator>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) > 0;
  }
  friend bool operator>=(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) >= 0;
  }

  /// Multiplicative inverse; throws ErrorCode::InvalidArgument at zero.
  Rational inverse() const;

  /// Integer power (negative exponents invert; 0^0 = 1 by convention,
  /// 0^k for k < 0 throws).
  Rational pow(long exponent) const;

  /// "p" when integral, "p/q" otherwise; round-trips through parse().
  std::string to_string() const;

  std::size_t hash() const noexcept;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;  // canonical: lowest terms, positive denominator
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace repst

template <>
struct std::hash<repst::Rational> {
  std::size_t operator()(const repst::Rational& value) const noexcept {
    return value.hash();
  }
};
