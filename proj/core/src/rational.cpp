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

#include "repst/rational.hpp"

#include <ostream>

#include "repst/error.hpp"

namespace repst {

Integer factorial(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (sgn(den) == 0) {
    fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
  Integer num, den;
  // mpz set_str tolerates leading whitespace but not empty/garbage strings.
  if (num_text.empty() || den_text.empty() ||
      mpz_set_str(num.get_mpz_t(), num_text.c_str(), 10) != 0 ||
      mpz_set_str(den.get_mpz_t(), den_text.c_str(), 10) != 0) {
    fail(ErrorCode::ParseError, "cannot parse rational", text);
  }
  if (sgn(den) == 0) fail(ErrorCode::ParseError, "zero denominator", text);
  return Rational(num, den);
}

Integer Rational::as_integer() const {
  if (!is_integer()) {
    fail(ErrorCode::NotIntegral, "rational is not an integer", to_string());
  }
  return numerator();
}

long Rational::as_long() const {
  const Integer n = as_integer();
  if (!n.fits_slong_p()) {
    fail(ErrorCode::NotIntegral, "integer does not fit in a machine long", to_string());
  }
  return n.get_si();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (rhs.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  const Rational base = exponent > 0 ? *this : inverse();
  unsigned long count = exponent > 0 ? static_cast<unsigned long>(exponent)
                                     : static_cast<unsigned long>(-(exponent + 1)) + 1;
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), count);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), count);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  return value_.get_str();  // GMP prints "p" or "p/q" in lowest terms
}

std::size_t Rational::hash() const noexcept {
  // Canonical representation makes the printed form a sound hash key.
  return std::hash<std::string>{}(value_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace repst
