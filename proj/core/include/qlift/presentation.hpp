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
 * @file presentation.hpp
 * @brief Lifting data of a quantum linear space over a finite abelian group.
 *
 * A presentation fixes the group, the generator degrees g_i, the characters
 * chi_i and the lifting scalars. The algebra it describes has the relations
 *
 *     h x_i     = chi_i(h) x_i h
 *     x_i^{r_i} = a_i (1 - g_i^{r_i})
 *     x_j x_i   = chi_i(g_j) x_i x_j + a_ij (1 - g_i g_j),   i < j
 *
 * so the stored off-diagonal scalar a_ij (i < j) is the coefficient that
 * appears when the out-of-order word x_j x_i is rewritten. The companion
 * coefficient for x_i x_j = chi_j(g_i) x_j x_i + c (1 - g_i g_j) is derived,
 * c = -chi_j(g_i) a_ij, and never stored.
 *
 * The C++ API uses 0-based generator indices; files and reports are 1-based.
 */

#ifndef QLIFT_PRESENTATION_HPP
#define QLIFT_PRESENTATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qlift/cyclotomic.hpp"
#include "qlift/group.hpp"
#include "qlift/report.hpp"

namespace qlift {

class LiftingPresentation {
 public:
  struct OffDiagonal {
    int i;  // 0-based, i < j
    int j;
    CyclotomicScalar value;
  };

  /// Structural validation only (lengths, index ranges, field of the scalars).
  /// Mathematical conditions are checked by validate().
  ///
  /// `modulus` selects the coefficient field Q(z_N); 0 means the group exponent.
  /// `declared_r`, when non-empty, is cross-checked by validate().
  LiftingPresentation(Group group, std::vector<GroupElement> g, std::vector<Character> chi,
                      std::vector<CyclotomicScalar> a, std::vector<OffDiagonal> a_off, int modulus = 0,
                      std::vector<int> declared_r = {});

  /// Coefficient field for a group, honouring an optional requested modulus.
  static int field_modulus(const Group& group, int requested);

  const Group& group() const noexcept { return group_; }
  int theta() const noexcept { return static_cast<int>(g_.size()); }
  int modulus() const noexcept { return modulus_; }

  const GroupElement& g(int i) const { return g_.at(static_cast<std::size_t>(i)); }
  const Character& chi(int i) const { return chi_.at(static_cast<std::size_t>(i)); }
  /// Order of chi_i(g_i) as a root of unity.
  int r(int i) const { return r_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& declared_r() const noexcept { return declared_r_; }
  /// chi_i(g_i).
  CyclotomicScalar q(int i) const;
  /// chi_i(h) in the coefficient field.
  CyclotomicScalar chi_value(int i, const GroupElement& h) const;

  const CyclotomicScalar& a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  /// Stored a_ij for i < j; zero when absent.
  CyclotomicScalar a_off(int i, int j) const;
  /// Coefficient c in x_i x_j = chi_j(g_i) x_j x_i + c (1 - g_i g_j), i < j.
  CyclotomicScalar reverse_coefficient(int i, int j) const;
  /// Nonzero off-diagonal entries, ascending (i, j).
  std::vector<OffDiagonal> nonzero_off_diagonal() const;
  const std::vector<OffDiagonal>& off_diagonal() const noexcept { return a_off_; }

  bool all_scalars_zero() const;

  /// |Gamma| * prod r_i.
  std::size_t dimension() const;
  /// prod r_i, the dimension of the Nichols algebra part.
  std::size_t nichols_dimension() const;

  CyclotomicScalar zero() const { return CyclotomicScalar::zero(modulus_); }
  CyclotomicScalar one() const { return CyclotomicScalar::one(modulus_); }
  CyclotomicScalar scalar(const Rational& value) const { return CyclotomicScalar::rational(modulus_, value); }
  /// z_N^k.
  CyclotomicScalar root(long k) const { return root_of_unity(modulus_, k); }

  /// Same group data, every lifting scalar zero (the Radford biproduct).
  LiftingPresentation trivial() const;
  /// Same group data with new scalars.
  LiftingPresentation with_scalars(std::vector<CyclotomicScalar> a, std::vector<OffDiagonal> a_off) const;

 private:
  Group group_;
  std::vector<GroupElement> g_;
  std::vector<Character> chi_;
  std::vector<CyclotomicScalar> a_;
  std::vector<OffDiagonal> a_off_;  // sorted by (i, j), unique
  int modulus_ = 1;
  std::vector<int> r_;
  std::vector<int> declared_r_;
};

/// Every mathematical condition on the lifting data, each with a witness.
/// Accepts iff `ok()`.
Report validate(const LiftingPresentation& p);

struct ConnectedComponents {
  /// Components sorted by smallest vertex; vertices ascending, 0-based.
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
};

/// Partition of the generators under the edges {i, j} with a_ij != 0.
ConnectedComponents connected_components(const LiftingPresentation& p);

}  // namespace qlift

#endif  // QLIFT_PRESENTATION_HPP
