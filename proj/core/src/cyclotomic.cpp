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

#include "repst/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "repst/error.hpp"

namespace repst {

unsigned euler_phi(unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const Polynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic polynomial Phi_0");
  static std::map<unsigned, Polynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod over proper divisors d of Phi_d. The recursion
  // bottoms out at Phi_1 = x - 1. Recursive calls re-enter the cache, so we
  // compute divisors first without holding references across the recursion.
  Polynomial numerator = Polynomial::monomial(n) - Polynomial(Rational(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto sub = cache.find(d);
    if (sub == cache.end()) {
      // Inline the recursion without re-locking: compute Phi_d by the same
      // formula. Divisors of d are < d and seen in increasing order, so all
      // their entries already exist.
      Polynomial num_d = Polynomial::monomial(d) - Polynomial(Rational(1));
      for (unsigned e = 1; e < d; ++e) {
        if (d % e == 0) num_d = Polynomial::exact_divide(num_d, cache.at(e));
      }
      sub = cache.emplace(d, std::move(num_d)).first;
    }
    numerator = Polynomial::exact_divide(numerator, sub->second);
  }
  return cache.emplace(n, std::move(numerator)).first->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(Rational value) : conductor_(1), coeffs_{std::move(value)} {}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  coeffs_.resize(euler_phi(conductor_), Rational(0));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "root of unity of order 0");
  long r = k % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
  raw.back() = Rational(1);
  return Cyclotomic(n, reduce(n, std::move(raw)));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned n, std::vector<Rational> coeffs) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic with conductor 0");
  if (coeffs.size() > euler_phi(n)) {
    fail(ErrorCode::InvalidArgument, "coefficient vector longer than phi(conductor)");
  }
  return Cyclotomic(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
  if (m % conductor_ != 0) {
    fail(ErrorCode::InvalidArgument, "embedding target is not a multiple of the conductor");
  }
  if (m == conductor_) return *this;
  const unsigned stride = m / conductor_;
  std::vector<Rational> raw(coeffs_.size() * static_cast<std::size_t>(stride), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) raw[k * stride] = coeffs_[k];  // zeta_N^k = zeta_M^(k*M/N)
  }
  return Cyclotomic(m, reduce(m, std::move(raw)));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  // The power basis makes representations unique, so rational values have all
  // non-constant coefficients equal to zero.
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) {
    fail(ErrorCode::NotIntegral, "cyclotomic value is not rational", to_string());
  }
  return coeffs_.empty() ? Rational(0) : coeffs_.front();
}

Cyclotomic Cyclotomic::conjugate() const {
  const unsigned n = conductor_;
  std::vector<Rational> raw(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    raw[(n - k) % n] += coeffs_[k];  // zeta^k -> zeta^(n-k)
  }
  return Cyclotomic(n, reduce(n, std::move(raw)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of cyclotomic zero");
  const Polynomial element{std::vector<Rational>(coeffs_)};
  const Polynomial& modulus = cyclotomic_polynomial(conductor_);
  auto [g, u, v] = Polynomial::extended_gcd(element, modulus);
  (void)v;
  if (g.degree() != 0) {
    // Impossible for a nonzero element of a field; defensive.
    fail(ErrorCode::InvalidArgument, "element not invertible mod cyclotomic polynomial");
  }
  const Rational scale = g.coeff(0).inverse();
  std::vector<Rational> raw = (u * scale).coeffs();
  return Cyclotomic(conductor_, reduce(conductor_, std::move(raw)));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic result(*this);
  for (Rational& c : result.coeffs_) c = -c;
  return result;
}

namespace {
unsigned lcm_unsigned(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const unsigned target = lcm_unsigned(conductor_, rhs.conductor_);
  *this = embedded(target);
  const Cyclotomic other = rhs.embedded(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  const unsigned target = lcm_unsigned(conductor_, rhs.conductor_);
  *this = embedded(target);
  const Cyclotomic other = rhs.embedded(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const unsigned target = lcm_unsigned(conductor_, rhs.conductor_);
  const Cyclotomic lhs = embedded(target);
  const Cyclotomic other = rhs.embedded(target);
  std::vector<Rational> raw(lhs.coeffs_.size() + other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (!other.coeffs_[j].is_zero()) raw[i + j] += lhs.coeffs_[i] * other.coeffs_[j];
    }
  }
  *this = Cyclotomic(target, reduce(target, std::move(raw)));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  const unsigned target = lcm_unsigned(lhs.conductor_, rhs.conductor_);
  return lhs.embedded(target).coeffs_ == rhs.embedded(target).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return as_rational().to_string();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational abs_c = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << abs_c.to_string();
    } else {
      if (abs_c != Rational(1)) out << abs_c.to_string() << "*";
      out << "z" << conductor_;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::vector<Rational> Cyclotomic::reduce(unsigned n, std::vector<Rational> raw) {
  const Polynomial remainder = Polynomial::divmod(Polynomial(std::move(raw)),
                                                  cyclotomic_polynomial(n)).second;
  std::vector<Rational> coeffs = remainder.coeffs();
  coeffs.resize(euler_phi(n), Rational(0));
  return coeffs;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) {
  return os << value.to_string();
}

}  // namespace repst
