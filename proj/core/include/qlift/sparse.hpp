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

#ifndef QLIFT_SPARSE_HPP
#define QLIFT_SPARSE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "qlift/cyclotomic.hpp"

namespace qlift {

/// Index of a basis monomial: r_index * |Gamma| + g_index.
using BasisIndex = std::uint32_t;

/// Sparse linear combination with canonical form: ordered keys, no zero coefficients.
template <class Key>
class SparseVector {
 public:
  using Map = std::map<Key, CyclotomicScalar>;

  SparseVector() = default;
  SparseVector(const Key& key, CyclotomicScalar coef) { add(key, std::move(coef)); }

  void add(const Key& key, const CyclotomicScalar& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_product(const Key& key, const CyclotomicScalar& a, const CyclotomicScalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, a * b);
      return;
    }
    it->second.add_product(a, b);
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add_scaled(const SparseVector& other, const CyclotomicScalar& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add_product(k, v, factor);
  }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [k, v] : other.terms_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [k, v] : other.terms_) add(k, -v);
    return *this;
  }
  SparseVector& operator*=(const CyclotomicScalar& factor) {
    if (factor.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= factor;
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const CyclotomicScalar& s, SparseVector a) { return a *= s; }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Map& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of `key`, or nullptr when absent.
  const CyclotomicScalar* find(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

using AlgebraElement = SparseVector<BasisIndex>;
using TensorElement = SparseVector<std::pair<BasisIndex, BasisIndex>>;
using TripleTensorElement = SparseVector<std::array<BasisIndex, 3>>;

}  // namespace qlift

#endif  // QLIFT_SPARSE_HPP
