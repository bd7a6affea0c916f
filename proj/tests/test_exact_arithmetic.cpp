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

/**
 * @file test_exact_arithmetic.cpp
 * @brief Property tests for the exact scalar tower Q -> Q[t] -> Q(zeta_N).
 *
 * The field axioms are checked on seeded random triples; the cyclotomic
 * layer is pinned against the defining identities prod_{d | N} Phi_d =
 * x^N - 1, deg Phi_N = phi(N), and the root-of-unity relations
 * zeta^j zeta^j' = zeta^{j+j'} and sum_j zeta_k^j = 0.
 */

#include <random>
#include <vector>

#include "doctest.h"
#include "repst/cyclotomic.hpp"
#include "repst/error.hpp"
#include "repst/polynomial.hpp"
#include "repst/rational.hpp"
#include "test_support.hpp"

namespace {

using namespace repst;
using testing::random_rational;

Cyclotomic random_cyclotomic(std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> conductor(1, 12);
  std::uniform_int_distribution<long> exponent(0, 23);
  const unsigned n = conductor(rng);
  Cyclotomic value = random_rational(rng);
  value += random_rational(rng) * Cyclotomic::root_of_unity(n, exponent(rng));
  value += random_rational(rng) * Cyclotomic::root_of_unity(n, exponent(rng));
  return value;
}

TEST_CASE("Rational: canonical form and parsing") {
  CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(-2), Integer(-4)) == Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(2), Integer(-4)).numerator() == -1);
  CHECK(Rational(Integer(2), Integer(-4)).denominator() == 2);
  CHECK(Rational(Integer(0), Integer(-7)) == Rational(0));
  CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);

  CHECK(Rational::parse("22/7").to_string() == "22/7");
  CHECK(Rational::parse("-3").to_string() == "-3");
  CHECK(Rational::parse("-6/4") == Rational(Integer(-3), Integer(2)));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);

  CHECK(Rational(Integer(7), Integer(1)).as_integer() == 7);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).as_integer(), Error);
  CHECK(Rational(5).pow(-2) == Rational(Integer(1), Integer(25)));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).pow(-1), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("Rational: field axioms on random triples") {
  std::mt19937 rng(20260301);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Rational(1));
    }
  }
}

TEST_CASE("factorial: values and domain") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), Error);
}

TEST_CASE("Polynomial: arithmetic, division and gcd") {
  const Polynomial t = Polynomial::variable();
  const Polynomial p = t * t - Polynomial(3) * t + 1;
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(-3));
  CHECK(p.coeff(5) == Rational(0));
  CHECK(p.evaluate(Rational(2)) == Rational(-1));
  CHECK(p.to_string() == "t^2 - 3*t + 1");
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial().degree() == -1);

  const auto [q, r] = Polynomial::divmod(p, t - 1);
  CHECK(q * (t - 1) + r == p);
  CHECK(r.degree() < 1);
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), Error);
  CHECK(Polynomial::exact_divide(p * (t + 2), t + 2) == p);
  CHECK_THROWS_AS(Polynomial::exact_divide(t * t + 1, t - 1), Error);

  // gcd((t-1)(t-2), (t-1)(t-3)) = t - 1, monic.
  const Polynomial g = Polynomial::gcd((t - 1) * (t - 2), (t - 1) * (t - 3));
  CHECK(g == t - 1);
  const auto [gg, u, v] = Polynomial::extended_gcd(t * t - 1, t * t - 4);
  CHECK(u * (t * t - 1) + v * (t * t - 4) == gg);
  CHECK(!gg.is_zero());
  CHECK(gg.degree() == 0);  // coprime inputs
  CHECK(Polynomial::gcd(Polynomial(), Polynomial()) == Polynomial());
}

TEST_CASE("Polynomial: ring axioms on random triples") {
  std::mt19937 rng(20260302);
  const auto random_poly = [&rng]() {
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<Rational> coeffs;
    const int d = deg(rng);
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng));
    return Polynomial(coeffs);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly();
    const Polynomial b = random_poly();
    const Polynomial c = random_poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    // Evaluation is a ring homomorphism.
    const Rational x = random_rational(rng);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
  }
}

TEST_CASE("cyclotomic_polynomial: defining identities up to N = 24") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(24) == 8);
  for (unsigned n = 1; n <= 24; ++n) {
    const Polynomial& phi = cyclotomic_polynomial(n);
    CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
    CHECK(phi.has_integer_coeffs());
    CHECK(phi.leading_coeff() == Rational(1));
    // prod_{d | n} Phi_d = x^n - 1.
    Polynomial product(Rational(1));
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) product *= cyclotomic_polynomial(d);
    }
    Polynomial target = Polynomial::monomial(n) - Polynomial(Rational(1));
    CHECK(product == target);
  }
  CHECK(cyclotomic_polynomial(1).to_string("x") == "x - 1");
  CHECK(cyclotomic_polynomial(6).to_string("x") == "x^2 - x + 1");
}

TEST_CASE("Cyclotomic: root-of-unity relations") {
  // zeta_k^j zeta_k^j' = zeta_k^{j+j'}, also after embedding into a larger
  // conductor N with k | N.
  for (unsigned k = 1; k <= 8; ++k) {
    for (long j = 0; j < static_cast<long>(k); ++j) {
      for (long j2 = 0; j2 < static_cast<long>(k); ++j2) {
        const Cyclotomic lhs =
            Cyclotomic::root_of_unity(k, j) * Cyclotomic::root_of_unity(k, j2);
        CHECK(lhs == Cyclotomic::root_of_unity(k, j + j2));
        const unsigned n = 2 * k;
        const Cyclotomic embedded = Cyclotomic::root_of_unity(k, j).embedded(n) *
                                    Cyclotomic::root_of_unity(k, j2).embedded(n);
        CHECK(embedded == Cyclotomic::root_of_unity(k, j + j2).embedded(n));
      }
    }
  }
  // sum_{j=0}^{k-1} zeta_k^j = 0 for k >= 2 (in the field of conductor k and
  // embedded into any multiple).
  for (unsigned k = 2; k <= 12; ++k) {
    Cyclotomic sum;
    Cyclotomic sum_embedded;
    for (long j = 0; j < static_cast<long>(k); ++j) {
      sum += Cyclotomic::root_of_unity(k, j);
      sum_embedded += Cyclotomic::root_of_unity(k, j).embedded(2 * k);
    }
    CHECK(sum.is_zero());
    CHECK(sum_embedded.is_zero());
  }
  // Negative exponents reduce mod k.
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
}

TEST_CASE("Cyclotomic: cross-conductor identities") {
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(6, 1) ==
        Cyclotomic(1) + Cyclotomic::root_of_unity(3, 1));  // zeta_6 = 1 + zeta_3
  CHECK(Cyclotomic::root_of_unity(3, 1) != Cyclotomic::root_of_unity(3, 2));
  // zeta + conj(zeta) is rational for conductor 3: -1.
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK((z3 + z3.conjugate()).as_rational() == Rational(-1));
  CHECK(z3.conjugate() == Cyclotomic::root_of_unity(3, 2));
  CHECK(!z3.is_rational());
  CHECK_THROWS_AS(z3.as_rational(), Error);
  CHECK(Cyclotomic(Rational(Integer(3), Integer(2))).is_rational());
}

TEST_CASE("Cyclotomic: field axioms on random triples") {
  std::mt19937 rng(20260303);
  for (int trial = 0; trial < 60; ++trial) {
    const Cyclotomic a = random_cyclotomic(rng);
    const Cyclotomic b = random_cyclotomic(rng);
    const Cyclotomic c = random_cyclotomic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic(1));
      CHECK(a / a == Cyclotomic(1));
    }
    // Conjugation is a field automorphism.
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
  }
  CHECK_THROWS_AS(Cyclotomic().inverse(), Error);
}

TEST_CASE("Cyclotomic: x * conj(x) is conjugation-fixed") {
  std::mt19937 rng(20260304);
  for (int trial = 0; trial < 40; ++trial) {
    const Cyclotomic a = random_cyclotomic(rng);
    const Cyclotomic norm = a * a.conjugate();
    CHECK(norm.conjugate() == norm);
  }
}

}  // namespace
