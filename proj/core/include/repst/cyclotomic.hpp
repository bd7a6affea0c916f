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
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * Character values of wreath products Z_c wr S_m live in Q(zeta_c), so the
 * library needs exact root-of-unity arithmetic. An element of Q(zeta_N) is
 * stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) of
 * Q[x]/(Phi_N(x)); that representation is unique, which makes equality,
 * rationality tests and zero tests trivial within a fixed conductor.
 *
 * Elements of different conductors mix by embedding both into Q(zeta_lcm)
 * via zeta_N = zeta_M^(M/N). No attempt is made to descend results to their
 * minimal conductor; the conductor is part of the value and all observers
 * (equality, conjugation, rationality) are conductor-agnostic.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "repst/polynomial.hpp"
#include "repst/rational.hpp"

namespace repst {

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// The N-th cyclotomic polynomial Phi_N (integer coefficients), computed by
/// the recursion Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d and memoized.
/// Requires N >= 1.
const Polynomial& cyclotomic_polynomial(unsigned n);

class Cyclotomic {
 public:
  /// Zero (conductor 1).
  Cyclotomic();

  /// Rational embeds with conductor 1 (implicit: scalars should mix freely).
  Cyclotomic(Rational value);
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}

  /// zeta_n^k (k arbitrary, reduced mod n). Requires n >= 1.
  static Cyclotomic root_of_unity(unsigned n, long k);

  /// From power-basis coefficients in Q(zeta_n); the vector may have any
  /// length up to phi(n) and is padded/validated.
  static Cyclotomic from_coeffs(unsigned n, std::vector<Rational> coeffs);

  unsigned conductor() const { return conductor_; }

  /// Power-basis coefficients, length phi(conductor()).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// The same value expressed in Q(zeta_m); requires conductor() | m.
  Cyclotomic embedded(unsigned m) const;

  bool is_zero() const;
  bool is_rational() const;

  /// Throws ErrorCode::NotIntegral when the value is irrational.
  Rational as_rational() const;

  /// Complex conjugation (the Galois automorphism zeta -> zeta^(-1)).
  Cyclotomic conjugate() const;

  /// Multiplicative inverse; throws ErrorCode::InvalidArgument at zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }

  /// Equality across conductors (compares in the common field).
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    return !(lhs == rhs);
  }

  /// Pretty form like "1 - z6^2" with z<N> denoting a primitive N-th root.
  std::string to_string() const;

 private:
  Cyclotomic(unsigned conductor, std::vector<Rational> coeffs);

  /// Reduces a raw polynomial-in-zeta coefficient vector mod Phi_N.
  static std::vector<Rational> reduce(unsigned n, std::vector<Rational> raw);

  unsigned conductor_;            // N >= 1
  std::vector<Rational> coeffs_;  // length phi(N), power basis mod Phi_N
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

}  // namespace repst
