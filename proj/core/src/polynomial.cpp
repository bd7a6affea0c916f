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

#include "repst/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include "repst/error.hpp"

namespace repst {

namespace {
const Rational kZero(0);
}  // namespace

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::variable() { return monomial(1); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  Polynomial result;
  if (!c.is_zero()) {
    result.coeffs_.assign(degree + 1, Rational(0));
    result.coeffs_[degree] = c;
  }
  return result;
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading_coeff() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::as_constant() const {
  if (!is_constant()) {
    fail(ErrorCode::NotIntegral, "polynomial is not constant", to_string());
  }
  return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_integer(); });
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);  // Horner evaluation
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial result(*this);
  for (Rational& c : result.coeffs_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

bool operator<(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) {
    return lhs.coeffs_.size() < rhs.coeffs_.size();
  }
  for (std::size_t i = lhs.coeffs_.size(); i-- > 0;) {
    if (lhs.coeffs_[i] != rhs.coeffs_[i]) return lhs.coeffs_[i] < rhs.coeffs_[i];
  }
  return false;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& numerator,
                                                     const Polynomial& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  Polynomial quotient;
  Polynomial remainder = numerator;
  const int d = divisor.degree();
  const Rational lead_inv = divisor.leading_coeff().inverse();
  while (!remainder.is_zero() && remainder.degree() >= d) {
    const std::size_t shift = static_cast<std::size_t>(remainder.degree() - d);
    const Rational factor = remainder.leading_coeff() * lead_inv;
    quotient += monomial(shift, factor);
    remainder -= monomial(shift, factor) * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

Polynomial Polynomial::exact_divide(const Polynomial& numerator, const Polynomial& divisor) {
  auto [quotient, remainder] = divmod(numerator, divisor);
  if (!remainder.is_zero()) {
    fail(ErrorCode::NotIntegral, "polynomial division left a remainder",
         numerator.to_string() + " / " + divisor.to_string());
  }
  return quotient;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero()) x *= x.leading_coeff().inverse();  // normalize monic
  return x;
}

std::tuple<Polynomial, Polynomial, Polynomial> Polynomial::extended_gcd(const Polynomial& a,
                                                                        const Polynomial& b) {
  // Invariants: u0*a + v0*b = r0 and u1*a + v1*b = r1.
  Polynomial r0 = a, r1 = b;
  Polynomial u0(Rational(1)), v0, u1, v1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Polynomial u2 = u0 - q * u1;
    Polynomial v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    const Rational scale = r0.leading_coeff().inverse();
    r0 *= scale; u0 *= scale; v0 *= scale;
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational abs_c = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = abs_c == Rational(1);
    if (i == 0) {
      out << abs_c.to_string();
    } else {
      if (!unit) out << abs_c.to_string() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace repst
