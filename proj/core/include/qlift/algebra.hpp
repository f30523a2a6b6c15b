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
 * @file algebra.hpp
 * @brief The Hopf algebras A = B(W) # K[Gamma] and their liftings on the PBW basis.
 *
 * Basis elements are x_1^{n_1} ... x_theta^{n_theta} g with 0 <= n_i < r_i.
 * An "R-monomial" is such a word with g = 1; R-monomials are numbered in
 * mixed radix with x_1 most significant, and the full basis index is
 * r_index * |Gamma| + g_index. Numeric order on indices is therefore the
 * lexicographic order on (powers, group exponents).
 *
 * Every product and coproduct here is H-bilinear, so tables are kept only
 * on R-monomials and extended by
 *
 *     (X g)(Y h) = chi_Y(g) (X Y) g h,
 *     Delta(X g) = Delta(X) (g (x) g).
 */

#ifndef QLIFT_ALGEBRA_HPP
#define QLIFT_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qlift/cyclotomic.hpp"
#include "qlift/group.hpp"
#include "qlift/presentation.hpp"
#include "qlift/report.hpp"
#include "qlift/sparse.hpp"

namespace qlift {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

struct BasisMonomial {
  std::vector<int> powers;
  GroupElement grp;
  auto operator<=>(const BasisMonomial&) const = default;
};

/// Index bookkeeping shared by every structure built on one presentation.
/// Depends only on the group data, never on the lifting scalars.
class Basis {
 public:
  /// Throws DimensionCapExceeded when |Gamma| prod r_i exceeds `cap`.
  explicit Basis(const LiftingPresentation& p, std::size_t cap = kDefaultDimensionCap);

  const Group& group() const noexcept { return group_; }
  int theta() const noexcept { return static_cast<int>(r_.size()); }
  int modulus() const noexcept { return modulus_; }
  int r(int i) const { return r_.at(static_cast<std::size_t>(i)); }

  std::size_t dimension() const noexcept { return nr_ * ng_; }
  std::size_t r_dimension() const noexcept { return nr_; }
  std::size_t group_size() const noexcept { return ng_; }

  BasisIndex index(std::size_t r, std::size_t g) const { return static_cast<BasisIndex>(r * ng_ + g); }
  std::size_t r_part(BasisIndex b) const { return b / ng_; }
  std::size_t g_part(BasisIndex b) const { return b % ng_; }

  const std::vector<int>& powers(std::size_t r) const { return powers_.at(r); }
  /// Throws StructuralError if a power is out of range or the length is wrong.
  std::size_t r_index(std::span<const int> powers) const;
  /// R-monomial x_i.
  std::size_t letter(int i) const { return letter_.at(static_cast<std::size_t>(i)); }
  int degree(std::size_t r) const { return degree_.at(r); }

  BasisMonomial monomial(BasisIndex b) const;
  BasisIndex index(const BasisMonomial& m) const;

  std::size_t g_index(const GroupElement& g) const { return group_.index(g); }
  const GroupElement& g_element(std::size_t g) const { return elements_.at(g); }
  std::size_t g_mul(std::size_t a, std::size_t b) const { return mul_[a * ng_ + b]; }
  std::size_t g_inv(std::size_t a) const { return inv_[a]; }
  /// Index of g_i.
  std::size_t generator(int i) const { return gen_.at(static_cast<std::size_t>(i)); }
  /// Group degree prod g_i^{n_i} of an R-monomial.
  std::size_t group_degree(std::size_t r) const { return gdeg_.at(r); }

  const Character& character(std::size_t r) const { return chars_.at(r); }
  /// k with chi_X(g) = z_E^k, E the group exponent.
  int chi_exponent(std::size_t r, std::size_t g) const { return chi_exp_[r * ng_ + g]; }
  const CyclotomicScalar& chi_value(std::size_t r, std::size_t g) const { return roots_[static_cast<std::size_t>(chi_exponent(r, g))]; }
  /// chi_{letter i}(g) exponent.
  int letter_exponent(int i, std::size_t g) const { return chi_exponent(letter(i), g); }
  /// z_E^k inside Q(z_N).
  const CyclotomicScalar& root(long k) const;
  int exponent() const noexcept { return group_.exponent(); }
  /// chi_X chi_Y = eps, the support condition for H-bilinear, H-balanced forms.
  bool balanced(std::size_t x, std::size_t y) const;

  const CyclotomicScalar& zero() const noexcept { return zero_; }
  const CyclotomicScalar& one() const noexcept { return roots_[0]; }

  std::string render_r(std::size_t r) const;
  std::string render(BasisIndex b) const;
  std::string render(const AlgebraElement& u) const;

  /// Same group, generators and characters.
  bool same_shape(const Basis& other) const;
  /// Built from the group data of `p`.
  bool matches(const LiftingPresentation& p) const;

 private:
  Group group_;
  int modulus_;
  std::vector<int> r_;
  std::size_t nr_ = 1;
  std::size_t ng_ = 1;
  std::vector<std::vector<int>> powers_;
  std::vector<int> degree_;
  std::vector<std::size_t> letter_;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> gen_;
  std::vector<std::size_t> gdeg_;
  std::vector<Character> chars_;
  std::vector<int> chi_exp_;
  std::vector<CyclotomicScalar> roots_;
  std::vector<GroupElement> generators_;
  CyclotomicScalar zero_;
};

/// An H-bilinear product determined by its values on pairs of R-monomials.
class ProductTable {
 public:
  virtual ~ProductTable() = default;

  const Basis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const noexcept { return basis_; }

  /// X . Y for R-monomials.
  const AlgebraElement& r_product(std::size_t x, std::size_t y) const { return table_[x * basis_->r_dimension() + y]; }
  /// out += coef * (a . b) on basis elements.
  void accumulate(AlgebraElement& out, BasisIndex a, BasisIndex b, const CyclotomicScalar& coef) const;
  AlgebraElement multiply_basis(BasisIndex a, BasisIndex b) const;
  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;
  /// Product in the ordinary tensor-product algebra.
  TensorElement multiply(const TensorElement& u, const TensorElement& v) const;

 protected:
  explicit ProductTable(std::shared_ptr<const Basis> basis);
  std::shared_ptr<const Basis> basis_;
  std::vector<AlgebraElement> table_;
};

/// Multiplication of A(a_i, a_ij) by normal-form rewriting.
class Multiplication final : public ProductTable {
 public:
  Multiplication(std::shared_ptr<const Basis> basis, const LiftingPresentation& p);

  /// Normal form of the word x_{w_0} x_{w_1} ... (0-based letters).
  AlgebraElement normal_form(std::span<const int> word) const;

 private:
  const AlgebraElement& reduce(const std::vector<int>& word) const;

  std::vector<CyclotomicScalar> a_;
  std::vector<std::vector<CyclotomicScalar>> s_;  // s_[a][b], a < b
  mutable std::mutex memo_mutex_;
  mutable std::map<std::vector<int>, AlgebraElement> memo_;
};

/// c * (X1 g1) (x) X2 with X2 group-free.
struct CoproductTerm {
  CyclotomicScalar coef;
  std::size_t r1;
  std::size_t g1;
  std::size_t r2;
};

/// c * (X1 g1) (x) (X2 g2) (x) X3 with X3 group-free.
struct DoubleCoproductTerm {
  CyclotomicScalar coef;
  std::size_t r1;
  std::size_t g1;
  std::size_t r2;
  std::size_t g2;
  std::size_t r3;
};

/// Coalgebra structure shared by A and all its liftings and twists.
class Coalgebra {
 public:
  /// `product` is used to multiply the Delta(x_i^{n_i}) factors.
  Coalgebra(std::shared_ptr<const Basis> basis, const ProductTable& product);

  const Basis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const noexcept { return basis_; }

  std::span<const CoproductTerm> delta(std::size_t r) const { return delta_.at(r); }
  /// (Delta (x) id) Delta.
  std::span<const DoubleCoproductTerm> delta2(std::size_t r) const { return delta2_.at(r); }
  /// (id (x) Delta) Delta, kept for the coassociativity check.
  std::span<const DoubleCoproductTerm> delta2_right(std::size_t r) const { return delta2_right_.at(r); }

  TensorElement comultiply(const AlgebraElement& u) const;
  TripleTensorElement comultiply_twice(const AlgebraElement& u) const;
  TripleTensorElement comultiply_twice_right(const AlgebraElement& u) const;
  CyclotomicScalar counit(const AlgebraElement& u) const;

  /// Closed form sum_k [n,k]_{q_i} x_i^k g_i^{n-k} (x) x_i^{n-k}.
  TensorElement delta_power(int i, int n) const;

  /// Both association orders of Delta^2 agree on every R-monomial.
  Report check_coassociativity() const;

 private:
  std::shared_ptr<const Basis> basis_;
  std::vector<std::vector<CoproductTerm>> delta_;
  std::vector<std::vector<DoubleCoproductTerm>> delta2_;
  std::vector<std::vector<DoubleCoproductTerm>> delta2_right_;
};

/// A lifting B = A(a_i, a_ij) as a Hopf algebra on the PBW basis. With all
/// scalars zero this is A itself.
class HopfAlgebra {
 public:
  /// Validates `p`; throws PreconditionError if it is not a valid presentation.
  explicit HopfAlgebra(LiftingPresentation p, std::size_t cap = kDefaultDimensionCap);
  /// Reuses an existing coalgebra (the basis must come from the same group data).
  HopfAlgebra(LiftingPresentation p, std::shared_ptr<const Coalgebra> coalgebra);

  /// The Radford biproduct of the same group data.
  static HopfAlgebra radford(const LiftingPresentation& p, std::size_t cap = kDefaultDimensionCap);

  const LiftingPresentation& presentation() const noexcept { return presentation_; }
  const Basis& basis() const noexcept { return coalgebra_->basis(); }
  const std::shared_ptr<const Basis>& basis_ptr() const noexcept { return coalgebra_->basis_ptr(); }
  const Multiplication& multiplication() const noexcept { return *multiplication_; }
  const std::shared_ptr<const Multiplication>& multiplication_ptr() const noexcept { return multiplication_; }
  const std::shared_ptr<const Coalgebra>& coalgebra() const noexcept { return coalgebra_; }

  AlgebraElement one() const;
  AlgebraElement x(int i) const;
  AlgebraElement group_element(const GroupElement& g) const;
  AlgebraElement monomial(std::span<const int> powers, const GroupElement& g) const;
  AlgebraElement basis_element(BasisIndex b) const;

  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;
  TensorElement comultiply(const AlgebraElement& u) const { return coalgebra_->comultiply(u); }
  TripleTensorElement comultiply_twice(const AlgebraElement& u) const { return coalgebra_->comultiply_twice(u); }
  CyclotomicScalar counit(const AlgebraElement& u) const { return coalgebra_->counit(u); }

  /// Delta(u v) = Delta(u) Delta(v), coassociativity and counit laws. With
  /// `full_basis` the multiplicativity check runs over all basis pairs,
  /// otherwise over R-monomial pairs (sufficient by H-bilinearity).
  Report check_bialgebra(bool full_basis = false, int jobs = 1) const;
  /// Associativity on R-monomial triples, or on all basis triples.
  Report check_associativity(bool full_basis = false, int jobs = 1) const;

 private:
  HopfAlgebra(LiftingPresentation p, std::shared_ptr<const Coalgebra> coalgebra, std::shared_ptr<const Multiplication> m);

  LiftingPresentation presentation_;
  std::shared_ptr<const Coalgebra> coalgebra_;
  std::shared_ptr<const Multiplication> multiplication_;
};

/// Keeps the terms with no x-letter (the K[Gamma] component).
AlgebraElement project_pi(const Basis& basis, const AlgebraElement& u);

/// Coefficient of the identity. Throws PreconditionError unless u lies in K[Gamma].
CyclotomicScalar integral_lambda(const Basis& basis, const AlgebraElement& u);

/// H-degree of a pair of R-monomials; the pair itself is unchanged.
struct Coaction {
  GroupElement degree;
  std::size_t left;
  std::size_t right;
};
Coaction coaction_rho(const Basis& basis, std::size_t left, std::size_t right);

/// Coassociativity, counit laws, and multiplicativity of Delta and the counit
/// for the product `m` on the coalgebra `C`.
Report check_bialgebra(const Coalgebra& C, const ProductTable& m, bool full_basis, int jobs);

/// Associativity check shared by every ProductTable (R-triples or all basis triples).
Report check_associativity(const ProductTable& m, bool full_basis, int jobs, const std::string& name);

}  // namespace qlift

#endif  // QLIFT_ALGEBRA_HPP
