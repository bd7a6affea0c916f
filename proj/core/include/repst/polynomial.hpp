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
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over the rationals.
 *
 * One polynomial type serves two roles:
 *  - coefficients of diagram morphisms, where the variable is the category
 *    parameter t (composition inserts factors of t per removed component),
 *  - scratch arithmetic inside the cyclotomic field ZZ[x]/Phi_N(x)
 *    (multiplication, division with remainder, extended gcd).
 *
 * Representation invariant: the coefficient vector carries no trailing zeros,
 * so the zero polynomial is the empty vector and degree() of zero is -1.
 */

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "repst/rational.hpp"

namespace repst {

class Polynomial {
 public:
  /// Zero polynomial.
  Polynomial() = default;

  /// Constant polynomial (implicit: scalars should mix freely with polys).
  Polynomial(Rational constant);
  Polynomial(int constant) : Polynomial(Rational(constant)) {}

  /// From coefficient list, coeffs[i] * x^i. Trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The variable x (degree-1 monic monomial).
  static Polynomial variable();

  /// c * x^degree.
  static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^i (zero beyond the degree).
  const Rational& coeff(std::size_t i) const;

  /// Leading coefficient. Throws ErrorCode::InvalidArgument at zero.
  const Rational& leading_coeff() const;

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Constant term as a Rational; throws ErrorCode::NotIntegral when the
  /// polynomial is not constant.
  Rational as_constant() const;

  bool has_integer_coeffs() const;

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& scalar) { return lhs *= scalar; }
  friend Polynomial operator*(const Rational& scalar, Polynomial rhs) { return rhs *= scalar; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) {
    return !(lhs == rhs);
  }
  /// Lexicographic on (degree, coefficients); a total order for map keys.
  friend bool operator<(const Polynomial& lhs, const Polynomial& rhs);

  /// Quotient and remainder with deg(rem) < deg(divisor).
  /// Throws ErrorCode::InvalidArgument when dividing by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& numerator,
                                                  const Polynomial& divisor);

  /// Exact division; throws ErrorCode::NotIntegral if a remainder survives.
  static Polynomial exact_divide(const Polynomial& numerator, const Polynomial& divisor);

  /// Monic gcd via Euclid's algorithm (gcd(0,0) = 0).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
  static std::tuple<Polynomial, Polynomial, Polynomial> extended_gcd(const Polynomial& a,
                                                                     const Polynomial& b);

  /// Pretty form like "t^2 - 3*t + 1" in the given variable name.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;  // coeffs_[i] multiplies x^i; no trailing zeros
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace repst
