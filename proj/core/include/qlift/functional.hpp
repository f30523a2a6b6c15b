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

#ifndef QLIFT_FUNCTIONAL_HPP
#define QLIFT_FUNCTIONAL_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qlift/algebra.hpp"
#include "qlift/report.hpp"

namespace qlift {

/// H-bilinear, H-balanced form A (x) A -> K, stored on pairs of R-monomials.
/// Extension to the full basis: f(X g (x) Y h) = chi_Y(g) f(X, Y).
class BilinearFunctional {
 public:
  /// The zero form.
  explicit BilinearFunctional(std::shared_ptr<const Coalgebra> coalgebra);
  /// eps (x) eps, the unit for convolution.
  static BilinearFunctional epsilon(std::shared_ptr<const Coalgebra> coalgebra);

  const Coalgebra& coalgebra() const noexcept { return *coalgebra_; }
  const std::shared_ptr<const Coalgebra>& coalgebra_ptr() const noexcept { return coalgebra_; }
  const Basis& basis() const noexcept { return coalgebra_->basis(); }

  const CyclotomicScalar& at(std::size_t x, std::size_t y) const { return table_[x * n_ + y]; }
  void set(std::size_t x, std::size_t y, CyclotomicScalar value);
  /// Value on a pair of basis elements through the extension rule.
  CyclotomicScalar evaluate_basis(BasisIndex a, BasisIndex b) const;

  /// f(1, Y) = eps(Y) and f(X, 1) = eps(X).
  bool is_unital() const;
  /// First pair (lexicographic) with a nonzero value but chi_X chi_Y != eps.
  std::optional<std::pair<std::size_t, std::size_t>> support_violation() const;
  /// Nonzero entries in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> support() const;

  BilinearFunctional& operator+=(const BilinearFunctional& other);
  BilinearFunctional& operator-=(const BilinearFunctional& other);
  friend BilinearFunctional operator+(BilinearFunctional a, const BilinearFunctional& b) { return a += b; }
  friend BilinearFunctional operator-(BilinearFunctional a, const BilinearFunctional& b) { return a -= b; }
  friend bool operator==(const BilinearFunctional& a, const BilinearFunctional& b);

 private:
  std::shared_ptr<const Coalgebra> coalgebra_;
  std::size_t n_;
  std::vector<CyclotomicScalar> table_;
};

CyclotomicScalar evaluate(const BilinearFunctional& f, const AlgebraElement& u, const AlgebraElement& v);
CyclotomicScalar evaluate(const BilinearFunctional& f, const TensorElement& t);

/// Support condition of a form; fails with the first offending pair.
Report certify_extension_rule(const BilinearFunctional& f, const std::string& name = "f");

/// (f * g)(u (x) v) = f(u_1 (x) v_1) g(u_2 (x) v_2). Throws PreconditionError on
/// mismatched coalgebras and CertificationError if an input or the result
/// violates the support condition.
BilinearFunctional convolve(const BilinearFunctional& f, const BilinearFunctional& g, int jobs = 1);

/// Recomputes f * g directly on pairs of basis elements whose group parts are
/// 1 or a cyclic generator, and compares with the extension rule applied to h.
Report certify_convolution(const BilinearFunctional& f, const BilinearFunctional& g, const BilinearFunctional& h,
                           int jobs = 1);

/// Neumann series sum_k (eps eps - f)^{*k}. Throws PreconditionError unless
/// f(1, 1) = 1 and f is unital, CertificationError if the series does not stop
/// within 2 sum (r_i - 1) + 2 terms.
BilinearFunctional convolution_inverse(const BilinearFunctional& f, int jobs = 1);

struct CocycleOptions {
  /// Check every basis triple instead of R-monomial triples.
  bool slow = false;
  int jobs = 1;
};

/// f(y_1 (x) z_1) f(x (x) y_2 z_2) = f(x_1 (x) y_1) f(x_2 y_2 (x) z) for the
/// product `m`. The first failing triple (lexicographic) is reported with both sides.
Report cocycle_check(const BilinearFunctional& f, const ProductTable& m, const CocycleOptions& options = {});

struct CocycleSides {
  CyclotomicScalar lhs;
  CyclotomicScalar rhs;
};
/// Both sides of the cocycle identity at one triple of basis elements.
CocycleSides cocycle_sides(const BilinearFunctional& f, const ProductTable& m, BasisIndex x, BasisIndex y, BasisIndex z);

struct FunctionalComparison {
  bool equal = true;
  /// Differing pairs of R-monomials, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> differences;
  std::optional<std::pair<std::size_t, std::size_t>> first() const {
    if (differences.empty()) return std::nullopt;
    return differences.front();
  }
};
FunctionalComparison functionals_equal(const BilinearFunctional& f, const BilinearFunctional& g);

}  // namespace qlift

#endif  // QLIFT_FUNCTIONAL_HPP
