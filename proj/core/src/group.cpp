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

#include "qlift/group.hpp"

#include <numeric>
#include <sstream>

#include "qlift/errors.hpp"

namespace qlift {
namespace {

int reduce_mod(long value, int m) {
  long r = value % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

}  // namespace

Group::Group(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw StructuralError("group needs at least one cyclic factor");
  for (int m : orders_) {
    if (m < 1) throw StructuralError("cyclic factor order must be >= 1, got " + std::to_string(m));
    size_ *= static_cast<std::size_t>(m);
    exponent_ = std::lcm(exponent_, m);
  }
}

void Group::check(const GroupElement& a) const {
  if (a.exponents.size() != orders_.size())
    throw StructuralError("group element has " + std::to_string(a.exponents.size()) + " exponents, group has rank " +
                          std::to_string(orders_.size()));
}

void Group::check(const Character& chi) const {
  if (chi.exponents.size() != orders_.size())
    throw StructuralError("character has " + std::to_string(chi.exponents.size()) + " exponents, group has rank " +
                          std::to_string(orders_.size()));
}

GroupElement Group::identity() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

GroupElement Group::element(std::span<const long> exponents) const {
  if (exponents.size() != orders_.size())
    throw StructuralError("group element has " + std::to_string(exponents.size()) + " exponents, group has rank " +
                          std::to_string(orders_.size()));
  GroupElement out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j) out.exponents[j] = reduce_mod(exponents[j], orders_[j]);
  return out;
}

GroupElement Group::element(std::initializer_list<long> exponents) const {
  return element(std::span<const long>(exponents.begin(), exponents.size()));
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j)
    out.exponents[j] = (a.exponents[j] + b.exponents[j]) % orders_[j];
  return out;
}

GroupElement Group::inverse(const GroupElement& a) const { return power(a, -1); }

GroupElement Group::power(const GroupElement& a, long n) const {
  check(a);
  GroupElement out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j)
    out.exponents[j] = reduce_mod(static_cast<long>(a.exponents[j]) * (n % orders_[j]), orders_[j]);
  return out;
}

int Group::order(const GroupElement& a) const {
  check(a);
  int result = 1;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const int m = orders_[j];
    result = std::lcm(result, m / std::gcd(m, a.exponents[j]));
  }
  return result;
}

bool Group::is_identity(const GroupElement& a) const {
  check(a);
  for (int e : a.exponents)
    if (e != 0) return false;
  return true;
}

Character Group::trivial_character() const { return Character{std::vector<int>(orders_.size(), 0)}; }

Character Group::character(std::span<const long> exponents) const {
  if (exponents.size() != orders_.size())
    throw StructuralError("character has " + std::to_string(exponents.size()) + " exponents, group has rank " +
                          std::to_string(orders_.size()));
  Character out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j) out.exponents[j] = reduce_mod(exponents[j], orders_[j]);
  return out;
}

Character Group::character(std::initializer_list<long> exponents) const {
  return character(std::span<const long>(exponents.begin(), exponents.size()));
}

Character Group::char_mul(const Character& a, const Character& b) const {
  check(a);
  check(b);
  Character out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j)
    out.exponents[j] = (a.exponents[j] + b.exponents[j]) % orders_[j];
  return out;
}

Character Group::char_pow(const Character& a, long n) const {
  check(a);
  Character out{std::vector<int>(orders_.size())};
  for (std::size_t j = 0; j < orders_.size(); ++j)
    out.exponents[j] = reduce_mod(static_cast<long>(a.exponents[j]) * (n % orders_[j]), orders_[j]);
  return out;
}

bool Group::is_trivial(const Character& chi) const {
  check(chi);
  for (int f : chi.exponents)
    if (f != 0) return false;
  return true;
}

int Group::pairing(const Character& chi, const GroupElement& a) const {
  check(chi);
  check(a);
  long k = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    const long scale = exponent_ / orders_[j];
    k = (k + static_cast<long>(chi.exponents[j]) * a.exponents[j] % orders_[j] * scale) % exponent_;
  }
  return static_cast<int>(k);
}

CyclotomicScalar Group::char_eval(const Character& chi, const GroupElement& a, int modulus) const {
  if (modulus % exponent_ != 0)
    throw ModulusMismatch("field Q(z_" + std::to_string(modulus) + ") does not contain the values of characters of a group of exponent " +
                          std::to_string(exponent_));
  return root_of_unity(modulus, static_cast<long>(pairing(chi, a)) * (modulus / exponent_));
}

std::size_t Group::index(const GroupElement& a) const {
  check(a);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j)
    idx = idx * static_cast<std::size_t>(orders_[j]) + static_cast<std::size_t>(a.exponents[j]);
  return idx;
}

GroupElement Group::element_at(std::size_t index) const {
  if (index >= size_) throw StructuralError("group index out of range");
  GroupElement out{std::vector<int>(orders_.size())};
  for (std::size_t j = orders_.size(); j-- > 0;) {
    out.exponents[j] = static_cast<int>(index % static_cast<std::size_t>(orders_[j]));
    index /= static_cast<std::size_t>(orders_[j]);
  }
  return out;
}

std::string Group::render(const GroupElement& a) const {
  check(a);
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < a.exponents.size(); ++j) {
    if (j) os << ',';
    os << a.exponents[j];
  }
  os << ')';
  return os.str();
}

}  // namespace qlift
