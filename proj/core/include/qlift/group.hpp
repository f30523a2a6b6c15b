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

#ifndef QLIFT_GROUP_HPP
#define QLIFT_GROUP_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlift/cyclotomic.hpp"

namespace qlift {

/// Element of C_{m_1} x ... x C_{m_c}, as reduced exponents on the cyclic generators.
struct GroupElement {
  std::vector<int> exponents;
  auto operator<=>(const GroupElement&) const = default;
};

/// Character of the same group. Its value on the j-th generator is z_{m_j}^{f_j}.
struct Character {
  std::vector<int> exponents;
  auto operator<=>(const Character&) const = default;
};

/// Finite abelian group given by its cyclic decomposition.
class Group {
 public:
  /// Throws StructuralError on an empty list or an order below 1.
  explicit Group(std::vector<int> orders);

  std::span<const int> orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t size() const noexcept { return size_; }
  /// Least common multiple of the orders.
  int exponent() const noexcept { return exponent_; }

  GroupElement identity() const;
  /// Reduces arbitrary integer exponents; throws StructuralError on a length mismatch.
  GroupElement element(std::span<const long> exponents) const;
  GroupElement element(std::initializer_list<long> exponents) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long n) const;
  /// Least n >= 1 with a^n = e.
  int order(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;

  Character trivial_character() const;
  Character character(std::span<const long> exponents) const;
  Character character(std::initializer_list<long> exponents) const;
  Character char_mul(const Character& a, const Character& b) const;
  Character char_pow(const Character& a, long n) const;
  bool is_trivial(const Character& chi) const;

  /// chi(a) written as z_E^k with E = exponent(); returns k in [0, E).
  int pairing(const Character& chi, const GroupElement& a) const;
  /// chi(a) inside Q(z_modulus); the modulus must be a multiple of exponent().
  CyclotomicScalar char_eval(const Character& chi, const GroupElement& a, int modulus) const;

  /// Mixed-radix index, first cyclic factor most significant.
  std::size_t index(const GroupElement& a) const;
  GroupElement element_at(std::size_t index) const;

  std::string render(const GroupElement& a) const;

  bool operator==(const Group& other) const { return orders_ == other.orders_; }

 private:
  void check(const GroupElement& a) const;
  void check(const Character& chi) const;

  std::vector<int> orders_;
  std::size_t size_ = 1;
  int exponent_ = 1;
};

}  // namespace qlift

#endif  // QLIFT_GROUP_HPP
