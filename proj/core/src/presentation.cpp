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

#include "qlift/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "qlift/errors.hpp"

namespace qlift {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    auto& ra = rank_[static_cast<std::size_t>(a)];
    auto& rb = rank_[static_cast<std::size_t>(b)];
    if (ra < rb) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    if (ra == rb) ++rank_[static_cast<std::size_t>(a)];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

int root_order(int k, int exponent) { return exponent / std::gcd(k, exponent); }

}  // namespace

int LiftingPresentation::field_modulus(const Group& group, int requested) {
  if (requested == 0) return group.exponent();
  if (requested < 0 || requested % group.exponent() != 0)
    throw StructuralError("modulus " + std::to_string(requested) + " is not a multiple of the group exponent " +
                          std::to_string(group.exponent()));
  return requested;
}

LiftingPresentation::LiftingPresentation(Group group, std::vector<GroupElement> g, std::vector<Character> chi,
                                         std::vector<CyclotomicScalar> a, std::vector<OffDiagonal> a_off, int modulus,
                                         std::vector<int> declared_r)
    : group_(std::move(group)),
      g_(std::move(g)),
      chi_(std::move(chi)),
      a_(std::move(a)),
      a_off_(std::move(a_off)),
      modulus_(field_modulus(group_, modulus)),
      declared_r_(std::move(declared_r)) {
  const std::size_t theta = g_.size();
  if (theta == 0) throw StructuralError("theta must be at least 1");
  if (chi_.size() != theta) throw StructuralError("chi has " + std::to_string(chi_.size()) + " entries, expected theta = " + std::to_string(theta));
  if (a_.empty()) a_.assign(theta, zero());
  if (a_.size() != theta) throw StructuralError("a has " + std::to_string(a_.size()) + " entries, expected theta = " + std::to_string(theta));
  if (!declared_r_.empty() && declared_r_.size() != theta)
    throw StructuralError("r has " + std::to_string(declared_r_.size()) + " entries, expected theta = " + std::to_string(theta));
  for (std::size_t i = 0; i < theta; ++i) {
    // Re-reducing through the group validates rank and normalises exponents.
    std::vector<long> ge(g_[i].exponents.begin(), g_[i].exponents.end());
    std::vector<long> ce(chi_[i].exponents.begin(), chi_[i].exponents.end());
    g_[i] = group_.element(ge);
    chi_[i] = group_.character(ce);
    if (a_[i].modulus() != modulus_)
      throw StructuralError("a_" + std::to_string(i + 1) + " lives in Q(z_" + std::to_string(a_[i].modulus()) +
                            "), expected Q(z_" + std::to_string(modulus_) + ")");
  }
  for (const auto& e : a_off_) {
    if (e.i < 0 || e.j < 0 || static_cast<std::size_t>(e.i) >= theta || static_cast<std::size_t>(e.j) >= theta)
      throw StructuralError("off-diagonal index (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ") out of range");
    if (e.i >= e.j)
      throw StructuralError("off-diagonal entries must have i < j, got (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")");
    if (e.value.modulus() != modulus_)
      throw StructuralError("a_" + std::to_string(e.i + 1) + std::to_string(e.j + 1) + " lives in the wrong field");
  }
  std::sort(a_off_.begin(), a_off_.end(), [](const OffDiagonal& x, const OffDiagonal& y) {
    return std::pair(x.i, x.j) < std::pair(y.i, y.j);
  });
  for (std::size_t k = 1; k < a_off_.size(); ++k)
    if (a_off_[k].i == a_off_[k - 1].i && a_off_[k].j == a_off_[k - 1].j)
      throw StructuralError("duplicate off-diagonal entry (" + std::to_string(a_off_[k].i + 1) + "," + std::to_string(a_off_[k].j + 1) + ")");
  r_.resize(theta);
  for (std::size_t i = 0; i < theta; ++i) r_[i] = root_order(group_.pairing(chi_[i], g_[i]), group_.exponent());
}

CyclotomicScalar LiftingPresentation::q(int i) const { return chi_value(i, g(i)); }

CyclotomicScalar LiftingPresentation::chi_value(int i, const GroupElement& h) const {
  return group_.char_eval(chi(i), h, modulus_);
}

CyclotomicScalar LiftingPresentation::a_off(int i, int j) const {
  if (i >= j) throw std::invalid_argument("a_off expects i < j");
  for (const auto& e : a_off_)
    if (e.i == i && e.j == j) return e.value;
  return zero();
}

CyclotomicScalar LiftingPresentation::reverse_coefficient(int i, int j) const {
  return -(chi_value(j, g(i)) * a_off(i, j));
}

std::vector<LiftingPresentation::OffDiagonal> LiftingPresentation::nonzero_off_diagonal() const {
  std::vector<OffDiagonal> out;
  for (const auto& e : a_off_)
    if (!e.value.is_zero()) out.push_back(e);
  return out;
}

bool LiftingPresentation::all_scalars_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const auto& s) { return s.is_zero(); }) &&
         std::all_of(a_off_.begin(), a_off_.end(), [](const auto& e) { return e.value.is_zero(); });
}

std::size_t LiftingPresentation::nichols_dimension() const {
  std::size_t d = 1;
  for (int r : r_) d *= static_cast<std::size_t>(r);
  return d;
}

std::size_t LiftingPresentation::dimension() const { return nichols_dimension() * group_.size(); }

LiftingPresentation LiftingPresentation::trivial() const {
  std::vector<CyclotomicScalar> a(a_.size(), zero());
  return with_scalars(std::move(a), {});
}

LiftingPresentation LiftingPresentation::with_scalars(std::vector<CyclotomicScalar> a, std::vector<OffDiagonal> a_off) const {
  return LiftingPresentation(group_, g_, chi_, std::move(a), std::move(a_off), modulus_, declared_r_);
}

Report validate(const LiftingPresentation& p) {
  Report report;
  const Group& G = p.group();
  const int theta = p.theta();
  auto idx = [](int i) { return i + 1; };

  for (int i = 0; i < theta; ++i) {
    for (int j = i + 1; j < theta; ++j) {
      auto v = p.chi_value(i, p.g(j)) * p.chi_value(j, p.g(i));
      report.add("QLS I: chi_i(g_j) chi_j(g_i) = 1", v.is_one(),
                 {{"i", idx(i)}, {"j", idx(j)}, {"value", v.to_string()}});
    }
  }
  for (int i = 0; i < theta; ++i) {
    report.add("QLS II: chi_i(g_i) primitive r_i-th root, r_i >= 2", p.r(i) >= 2,
               {{"i", idx(i)}, {"r", p.r(i)}, {"q", p.q(i).to_string()}});
    if (!p.declared_r().empty()) {
      const int declared = p.declared_r()[static_cast<std::size_t>(i)];
      report.add("declared r_i matches order of chi_i(g_i)", declared == p.r(i),
                 {{"i", idx(i)}, {"declared", declared}, {"computed", p.r(i)}});
    }
  }
  for (int i = 0; i < theta; ++i) {
    if (p.a(i).is_zero()) continue;
    const auto gr = G.power(p.g(i), p.r(i));
    report.add("a_i != 0: g_i^r_i != 1", !G.is_identity(gr),
               {{"i", idx(i)}, {"a_i", p.a(i).to_string()}, {"g_i^r_i", G.render(gr)}});
    const auto chir = G.char_pow(p.chi(i), p.r(i));
    report.add("a_i != 0: chi_i^r_i = eps", G.is_trivial(chir), {{"i", idx(i)}, {"chi_i^r_i", chir.exponents}});
  }
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(theta));
  for (const auto& e : p.nonzero_off_diagonal()) {
    neighbours[static_cast<std::size_t>(e.i)].push_back(e.j);
    neighbours[static_cast<std::size_t>(e.j)].push_back(e.i);
    const auto gg = G.mul(p.g(e.i), p.g(e.j));
    nlohmann::json w{{"i", idx(e.i)}, {"j", idx(e.j)}, {"a_ij", e.value.to_string()}};
    auto wg = w;
    wg["g_i g_j"] = G.render(gg);
    report.add("a_ij != 0: g_i g_j != 1", !G.is_identity(gg), wg);
    const auto cc = G.char_mul(p.chi(e.i), p.chi(e.j));
    auto wc = w;
    wc["chi_i chi_j"] = cc.exponents;
    report.add("a_ij != 0: chi_i chi_j = eps required", G.is_trivial(cc), wc);
    auto wr = w;
    wr["r_i"] = p.r(e.i);
    wr["r_j"] = p.r(e.j);
    report.add("a_ij != 0: r_i = r_j", p.r(e.i) == p.r(e.j), wr,
               "implied by chi_i chi_j = eps together with QLS I and QLS II");
  }
  for (int i = 0; i < theta; ++i) {
    const auto& nb = neighbours[static_cast<std::size_t>(i)];
    if (nb.size() < 2) continue;
    bool all_two = p.r(i) == 2;
    nlohmann::json rs = nlohmann::json::array();
    nlohmann::json ids = nlohmann::json::array();
    for (int k : nb) {
      all_two = all_two && p.r(k) == 2;
      ids.push_back(idx(k));
      rs.push_back(p.r(k));
    }
    report.add("shared index: all involved r = 2", all_two,
               {{"i", idx(i)}, {"r_i", p.r(i)}, {"neighbours", ids}, {"neighbour_r", rs}});
  }
  return report;
}

ConnectedComponents connected_components(const LiftingPresentation& p) {
  const int theta = p.theta();
  UnionFind uf(theta);
  for (const auto& e : p.nonzero_off_diagonal()) uf.unite(e.i, e.j);
  ConnectedComponents out;
  out.component_of.assign(static_cast<std::size_t>(theta), -1);
  std::vector<int> root_to_component(static_cast<std::size_t>(theta), -1);
  for (int v = 0; v < theta; ++v) {
    const int root = uf.find(v);
    auto& c = root_to_component[static_cast<std::size_t>(root)];
    if (c < 0) {
      c = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[static_cast<std::size_t>(c)].push_back(v);
    out.component_of[static_cast<std::size_t>(v)] = c;
  }
  return out;
}

}  // namespace qlift
