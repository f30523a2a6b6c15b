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
 * @file deform.hpp
 * @brief Twisting cocycles for liftings of quantum linear spaces.
 *
 * The elementary cocycles are
 *
 *     gamma_i (x_i^m   (x) x_i^{r_i - m}) = a_i,            0 < m < r_i,
 *     gamma_ij(x_j^m   (x) x_i^m)         = (m)!_q a_ij^m,  0 <= m < r_i,  i < j,
 *
 * and eps (x) eps elsewhere. For each connected component of the graph with
 * edges {i, j : a_ij != 0} the component cocycle convolves the off-diagonal
 * factors first and the diagonal ones after; alpha is the convolution of the
 * component cocycles in ascending order. Twisting A by alpha yields the
 * lifting B with the identity on the PBW basis as isomorphism.
 */

#ifndef QLIFT_DEFORM_HPP
#define QLIFT_DEFORM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlift/algebra.hpp"
#include "qlift/functional.hpp"
#include "qlift/presentation.hpp"

namespace qlift {

/// A presentation together with A (all scalars zero) and B (the lifting),
/// sharing one coalgebra.
class Deformation {
 public:
  /// Throws PreconditionError for an invalid presentation and
  /// DimensionCapExceeded above `cap`.
  explicit Deformation(LiftingPresentation p, std::size_t cap = kDefaultDimensionCap, int jobs = 1);

  const LiftingPresentation& presentation() const noexcept { return lifting_.presentation(); }
  const HopfAlgebra& radford() const noexcept { return radford_; }
  const HopfAlgebra& lifting() const noexcept { return lifting_; }
  const Basis& basis() const noexcept { return radford_.basis(); }
  const std::shared_ptr<const Coalgebra>& coalgebra() const noexcept { return radford_.coalgebra(); }
  int jobs() const noexcept { return jobs_; }

  BilinearFunctional epsilon() const { return BilinearFunctional::epsilon(coalgebra()); }
  /// R-monomial x_1^{n_1} ... x_theta^{n_theta}.
  std::size_t r_index(std::span<const int> powers) const { return basis().r_index(powers); }

 private:
  HopfAlgebra radford_;
  HopfAlgebra lifting_;
  int jobs_;
};

/// gamma_i with scalar a_i, or `value` when given.
BilinearFunctional build_gamma_i(const Deformation& ctx, int i, std::optional<CyclotomicScalar> value = std::nullopt);
/// gamma_ij (i < j) with scalar a_ij, or `value` when given.
BilinearFunctional build_gamma_ij(const Deformation& ctx, int i, int j, std::optional<CyclotomicScalar> value = std::nullopt);

struct CocycleFactor {
  int i;
  int j;  // -1 for a diagonal factor gamma_i
  bool trivial;
  bool diagonal() const noexcept { return j < 0; }
  std::string name() const;
};

struct ComponentPlan {
  std::vector<int> vertices;  // 0-based, ascending
  std::vector<CocycleFactor> factors;
  std::string render() const;
};

struct ComponentCocyclePlan {
  std::vector<ComponentPlan> components;
  std::string render() const;
  nlohmann::json to_json() const;
};

ComponentCocyclePlan plan_alpha(const LiftingPresentation& p);

struct AlphaResult {
  BilinearFunctional alpha;
  ComponentCocyclePlan plan;
  /// Cocycle check of alpha against A (empty when not requested).
  Report certification;
};

/// Builds alpha. With `certify`, throws CertificationError if it fails the cocycle check.
AlphaResult build_alpha(const Deformation& ctx, bool certify = true);

/// alpha for theta = 2 tabulated from closed formulas, without convolution.
BilinearFunctional alpha_closed_form_quantum_plane(const Deformation& ctx);

/// A with multiplication gamma * m_A * gamma^{-1}.
class TwistedAlgebra final : public ProductTable {
 public:
  /// Builds the table; performs no checks (see twist()).
  TwistedAlgebra(const Deformation& ctx, BilinearFunctional gamma);

  const BilinearFunctional& gamma() const noexcept { return gamma_; }
  const BilinearFunctional& gamma_inverse() const noexcept { return gamma_inverse_; }
  /// Checks run by twist().
  const Report& construction_report() const noexcept { return construction_report_; }

  /// Product of two basis elements evaluated from the defining sum directly.
  AlgebraElement direct_product(BasisIndex a, BasisIndex b) const;

 private:
  friend TwistedAlgebra twist(const Deformation&, const BilinearFunctional&, const struct TwistOptions&);

  BilinearFunctional gamma_;
  BilinearFunctional gamma_inverse_;
  std::shared_ptr<const Multiplication> product_;
  std::shared_ptr<const Coalgebra> coalgebra_;
  Report construction_report_;
};

struct TwistOptions {
  bool check_precondition = true;
  bool check_associativity = true;
  bool full_basis = false;
  /// Also record the bialgebra laws of A^gamma in the construction report.
  bool check_bialgebra = false;
};

/// Throws PreconditionError unless gamma passes the cocycle check on A, and
/// CertificationError if the twisted product is not associative.
TwistedAlgebra twist(const Deformation& ctx, const BilinearFunctional& gamma, const TwistOptions& options = {});

/// Basis preservation and the lifting relations for a product on the basis of A.
Report verify_twist_is_lifting(const Deformation& ctx, const ProductTable& product);

/// Hypotheses on gamma under which A^gamma is isomorphic to B.
Report check_gamma_hypotheses(const Deformation& ctx, const BilinearFunctional& gamma);

struct LambdaPiM {
  BilinearFunctional table;
  /// pi(X . Y) on pairs of R-monomials, row-major.
  std::vector<AlgebraElement> xi;
  Report certification;
  const AlgebraElement& xi_at(std::size_t x, std::size_t y) const { return xi[x * table.basis().r_dimension() + y]; }
};

/// lambda(pi(X . Y)) for R-monomials X, Y.
LambdaPiM lambda_pi_m(const Deformation& ctx, const ProductTable& product);

struct ConditionVerdict {
  std::string name;
  bool applicable = true;
  bool holds = false;
  nlohmann::json witness = nlohmann::json::object();
};

struct LambdaXiAnalysis {
  std::vector<ConditionVerdict> conditions;
  /// First condition that holds.
  std::optional<std::string> holding;
  std::optional<BilinearFunctional> alpha;
  std::optional<LambdaPiM> lambda;
  FunctionalComparison comparison;
  /// (lambda (x) alpha^{-1}) rho = eps on R (x) R.
  bool rho_identity = false;
  Report lambda_cocycle;

  /// Hypotheses as data; checks that fail only on engine inconsistencies.
  Report to_report() const;
};

/// Group-theoretic hypotheses only.
std::vector<ConditionVerdict> lambdaxi_conditions(const LiftingPresentation& p);

/// Hypotheses, alpha, lambda pi m_{A^alpha}, their comparison and the cocycle verdict on lambda pi m.
LambdaXiAnalysis check_lambdaxi_conditions(const Deformation& ctx);

struct CommutationResult {
  std::vector<std::string> factors;
  /// matrix[u][v]: the u-th and v-th elementary cocycles commute.
  std::vector<std::vector<bool>> matrix;
  Report report;
};

/// Pairwise commutation of the nontrivial elementary cocycles.
CommutationResult check_commutation(const Deformation& ctx);

}  // namespace qlift

#endif  // QLIFT_DEFORM_HPP
