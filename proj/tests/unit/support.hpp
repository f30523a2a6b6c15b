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

// Shared fixtures: golden data location, a complex embedding of Q(z_N),
// random scalars and a family of quantum planes.

#ifndef QLIFT_TESTS_SUPPORT_HPP
#define QLIFT_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qlift/cyclotomic.hpp"
#include "qlift/presentation.hpp"

namespace qlift::testing {

inline std::string data_path(const std::string& name) { return std::string(QLIFT_TEST_DATA) + "/" + name; }

inline std::complex<double> embed(const CyclotomicScalar& s) {
  const double step = 2.0 * std::numbers::pi / s.modulus();
  std::complex<double> out;
  const auto c = s.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out += c[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
  return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-7) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

class ScalarGen {
 public:
  explicit ScalarGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational small_rational() {
    return Rational(uniform(-9, 9), uniform(1, 5));
  }

  /// Sparse random element of Q(z_N); zero with small probability.
  CyclotomicScalar scalar(int modulus) {
    const int terms = uniform(0, 3);
    CyclotomicScalar s = CyclotomicScalar::zero(modulus);
    for (int t = 0; t < terms; ++t)
      s += CyclotomicScalar::rational(modulus, small_rational()) * root_of_unity(modulus, uniform(0, modulus - 1));
    return s;
  }

  CyclotomicScalar nonzero(int modulus) {
    for (;;) {
      auto s = scalar(modulus);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct PlaneScalars {
  Rational a1;
  Rational a2;
  Rational a12;
};

/// Quantum plane over C_{2r} x C_r with g_1 = (1,0), g_2 = (1,1),
/// chi_1 = (2,0), chi_2 = (-2,0): q = chi_1(g_1) = z_r, r_1 = r_2 = r,
/// chi_1 chi_2 = eps, and g_1^r, g_2^r, g_1 g_2 all nontrivial.
inline LiftingPresentation quantum_plane(int r, const PlaneScalars& s) {
  Group G({2 * r, r});
  std::vector<GroupElement> g{G.element({1, 0}), G.element({1, 1})};
  std::vector<Character> chi{G.character({2, 0}), G.character({-2, 0})};
  const int N = LiftingPresentation::field_modulus(G, 0);
  std::vector<CyclotomicScalar> a{CyclotomicScalar::rational(N, s.a1), CyclotomicScalar::rational(N, s.a2)};
  std::vector<LiftingPresentation::OffDiagonal> off;
  if (s.a12 != 0) off.push_back({0, 1, CyclotomicScalar::rational(N, s.a12)});
  return LiftingPresentation(G, g, chi, a, off);
}

/// r^n as a size.
inline std::size_t ipow(std::size_t r, int n) {
  std::size_t out = 1;
  while (n-- > 0) out *= r;
  return out;
}

}  // namespace qlift::testing

#endif  // QLIFT_TESTS_SUPPORT_HPP
