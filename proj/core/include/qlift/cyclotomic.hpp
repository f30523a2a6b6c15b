/*
   Copyright 2026 The qlift Authors

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
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(z), z a primitive N-th root of 1.
 *
 * Elements are stored as residues modulo the N-th cyclotomic polynomial, so
 * the representation is canonical and equality is coefficient-wise. All
 * rationals are GMP rationals; nothing here ever touches floating point.
 */

#ifndef QLIFT_CYCLOTOMIC_HPP
#define QLIFT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qlift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
using RationalPolynomial = std::vector<Rational>;

/// Returns the N-th cyclotomic polynomial. Requires N >= 1.
RationalPolynomial cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

class CyclotomicScalar {
 public:
  /// One term of the canonical serialization: numerator/denominator * z^power.
  struct Term {
    Integer numerator;
    Integer denominator;
    int power;
  };

  /// Zero of Q (modulus 1). Prefer the named constructors below.
  CyclotomicScalar();

  static CyclotomicScalar zero(int modulus);
  static CyclotomicScalar one(int modulus);
  static CyclotomicScalar rational(int modulus, const Rational& value);
  /// Reduces an arbitrary polynomial in z (coefficient k multiplies z^k).
  static CyclotomicScalar from_polynomial(int modulus, std::span<const Rational> coeffs);
  static CyclotomicScalar from_terms(int modulus, std::span<const Term> terms);

  int modulus() const noexcept { return modulus_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q.
  bool is_rational() const noexcept;

  CyclotomicScalar& operator+=(const CyclotomicScalar& other);
  CyclotomicScalar& operator-=(const CyclotomicScalar& other);
  CyclotomicScalar& operator*=(const CyclotomicScalar& other);
  CyclotomicScalar operator-() const;

  /// Adds `a * b` in place without materialising the product.
  CyclotomicScalar& add_product(const CyclotomicScalar& a, const CyclotomicScalar& b);

  /// Multiplicative inverse; throws DivisionByZero on zero.
  CyclotomicScalar inverse() const;
  /// Integer power; negative exponents invert.
  CyclotomicScalar pow(long exponent) const;

  /// Canonical term list: sorted by power, reduced fractions, zero terms dropped.
  std::vector<Term> terms() const;
  /// Human-readable rendering, `z` standing for the primitive root.
  std::string to_string() const;

  friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);

 private:
  CyclotomicScalar(int modulus, std::vector<Rational> coeffs)
      : modulus_(modulus), coeffs_(std::move(coeffs)) {}
  void require_same_field(const CyclotomicScalar& other) const;

  int modulus_ = 1;
  std::vector<Rational> coeffs_;
};

inline CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
inline CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
inline CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& s);

/// z^k in Q(z_N); k is reduced modulo N.
CyclotomicScalar root_of_unity(int modulus, long k);

/// 1 + q + ... + q^(n-1); zero for n <= 0.
CyclotomicScalar q_integer(int n, const CyclotomicScalar& q);

/// (m)!_q = prod_{t=1..m} (t)_q with (0)!_q = 1. Throws std::invalid_argument for m < 0.
CyclotomicScalar q_factorial(int m, const CyclotomicScalar& q);

/// Gaussian binomial through the q-Pascal recursion
///   [n,k] = [n-1,k-1] + q^k [n-1,k],  [n,0] = 1,
/// and zero whenever n, k or n-k is negative.
CyclotomicScalar q_binomial(int n, int k, const CyclotomicScalar& q);

}  // namespace qlift

#endif  // QLIFT_CYCLOTOMIC_HPP
