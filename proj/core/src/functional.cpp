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

#include "qlift/functional.hpp"

#include "qlift/errors.hpp"
#include "qlift/parallel.hpp"

namespace qlift {
namespace {

void require_compatible(const BilinearFunctional& f, const BilinearFunctional& g) {
  if (f.coalgebra_ptr() != g.coalgebra_ptr() && !f.basis().same_shape(g.basis()))
    throw PreconditionError("functionals belong to different presentations");
}

void require_compatible(const BilinearFunctional& f, const ProductTable& m) {
  if (f.coalgebra().basis_ptr() != m.basis_ptr() && !f.basis().same_shape(m.basis()))
    throw PreconditionError("functional and multiplication belong to different presentations");
}

// sum f(u_1 (x) v_1) m(u_2 (x) v_2) for basis elements u, v.
AlgebraElement half_product(const BilinearFunctional& f, const ProductTable& m, BasisIndex u, BasisIndex v) {
  const Basis& B = f.basis();
  const Coalgebra& C = f.coalgebra();
  const std::size_t gu = B.g_part(u);
  const std::size_t gv = B.g_part(v);
  AlgebraElement out;
  for (const auto& s : C.delta(B.r_part(u))) {
    const BasisIndex s1 = B.index(s.r1, B.g_mul(s.g1, gu));
    const BasisIndex s2 = B.index(s.r2, gu);
    for (const auto& t : C.delta(B.r_part(v))) {
      const CyclotomicScalar fv = f.evaluate_basis(s1, B.index(t.r1, B.g_mul(t.g1, gv)));
      if (fv.is_zero()) continue;
      m.accumulate(out, s2, B.index(t.r2, gv), s.coef * t.coef * fv);
    }
  }
  return out;
}

CyclotomicScalar left_side(const BilinearFunctional& f, BasisIndex x, const AlgebraElement& w) {
  CyclotomicScalar s = f.basis().zero();
  for (const auto& [b, c] : w) s.add_product(c, f.evaluate_basis(x, b));
  return s;
}

CyclotomicScalar right_side(const BilinearFunctional& f, const AlgebraElement& v, BasisIndex z) {
  CyclotomicScalar s = f.basis().zero();
  for (const auto& [b, c] : v) s.add_product(c, f.evaluate_basis(b, z));
  return s;
}

nlohmann::json pair_json(const Basis& B, std::size_t x, std::size_t y) {
  return {{"left", B.render_r(x)}, {"right", B.render_r(y)}};
}

}  // namespace

BilinearFunctional::BilinearFunctional(std::shared_ptr<const Coalgebra> coalgebra)
    : coalgebra_(std::move(coalgebra)), n_(coalgebra_->basis().r_dimension()), table_(n_ * n_, coalgebra_->basis().zero()) {}

BilinearFunctional BilinearFunctional::epsilon(std::shared_ptr<const Coalgebra> coalgebra) {
  BilinearFunctional f(std::move(coalgebra));
  f.set(0, 0, f.basis().one());
  return f;
}

void BilinearFunctional::set(std::size_t x, std::size_t y, CyclotomicScalar value) {
  if (x >= n_ || y >= n_) throw StructuralError("functional entry out of range");
  if (value.modulus() != basis().modulus()) throw ModulusMismatch("functional value lives in the wrong field");
  table_[x * n_ + y] = std::move(value);
}

CyclotomicScalar BilinearFunctional::evaluate_basis(BasisIndex a, BasisIndex b) const {
  const Basis& B = basis();
  const auto& v = at(B.r_part(a), B.r_part(b));
  if (v.is_zero()) return v;
  return v * B.chi_value(B.r_part(b), B.g_part(a));
}

bool BilinearFunctional::is_unital() const {
  for (std::size_t y = 0; y < n_; ++y) {
    const bool unit = y == 0;
    if (unit ? !at(0, y).is_one() : !at(0, y).is_zero()) return false;
    if (unit ? !at(y, 0).is_one() : !at(y, 0).is_zero()) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> BilinearFunctional::support_violation() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (!at(x, y).is_zero() && !basis().balanced(x, y)) return std::pair(x, y);
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> BilinearFunctional::support() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (!at(x, y).is_zero()) out.emplace_back(x, y);
  return out;
}

BilinearFunctional& BilinearFunctional::operator+=(const BilinearFunctional& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < table_.size(); ++k) table_[k] += other.table_[k];
  return *this;
}

BilinearFunctional& BilinearFunctional::operator-=(const BilinearFunctional& other) {
  require_compatible(*this, other);
  for (std::size_t k = 0; k < table_.size(); ++k) table_[k] -= other.table_[k];
  return *this;
}

bool operator==(const BilinearFunctional& a, const BilinearFunctional& b) {
  return a.basis().same_shape(b.basis()) && a.table_ == b.table_;
}

CyclotomicScalar evaluate(const BilinearFunctional& f, const AlgebraElement& u, const AlgebraElement& v) {
  CyclotomicScalar s = f.basis().zero();
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) {
      const auto fv = f.evaluate_basis(a, b);
      if (!fv.is_zero()) s.add_product(ca * cb, fv);
    }
  return s;
}

CyclotomicScalar evaluate(const BilinearFunctional& f, const TensorElement& t) {
  CyclotomicScalar s = f.basis().zero();
  for (const auto& [k, c] : t) s.add_product(c, f.evaluate_basis(k.first, k.second));
  return s;
}

Report certify_extension_rule(const BilinearFunctional& f, const std::string& name) {
  Report report;
  if (auto bad = f.support_violation()) {
    auto w = pair_json(f.basis(), bad->first, bad->second);
    w["value"] = f.at(bad->first, bad->second).to_string();
    report.add(name + ": nonzero only where chi_X chi_Y = eps", false, w);
  } else {
    report.add(name + ": nonzero only where chi_X chi_Y = eps", true);
  }
  return report;
}

BilinearFunctional convolve(const BilinearFunctional& f, const BilinearFunctional& g, int jobs) {
  require_compatible(f, g);
  for (const auto* in : {&f, &g}) {
    if (auto bad = in->support_violation())
      throw CertificationError("convolve: input violates the extension rule at (" + in->basis().render_r(bad->first) + ", " +
                               in->basis().render_r(bad->second) + ")");
  }
  const Basis& B = f.basis();
  const Coalgebra& C = f.coalgebra();
  const std::size_t n = B.r_dimension();
  BilinearFunctional h(f.coalgebra_ptr());
  parallel_for(n, jobs, [&](std::size_t x) {
    const auto dx = C.delta(x);
    for (std::size_t y = 0; y < n; ++y) {
      CyclotomicScalar acc = B.zero();
      for (const auto& t : C.delta(y)) {
        for (const auto& s : dx) {
          const auto& fv = f.at(s.r1, t.r1);
          if (fv.is_zero()) continue;
          const auto& gv = g.at(s.r2, t.r2);
          if (gv.is_zero()) continue;
          acc.add_product(s.coef * t.coef * B.chi_value(t.r1, s.g1), fv * gv);
        }
      }
      h.set(x, y, std::move(acc));
    }
  });
  if (auto bad = h.support_violation())
    throw CertificationError("convolve: result violates the extension rule at (" + B.render_r(bad->first) + ", " +
                             B.render_r(bad->second) + ")");
  return h;
}

Report certify_convolution(const BilinearFunctional& f, const BilinearFunctional& g, const BilinearFunctional& h, int jobs) {
  require_compatible(f, g);
  require_compatible(f, h);
  const Basis& B = f.basis();
  const Coalgebra& C = f.coalgebra();
  std::vector<std::size_t> decorations{0};
  for (std::size_t j = 0; j < B.group().rank(); ++j) {
    std::vector<long> e(B.group().rank(), 0);
    e[j] = 1;
    const std::size_t gi = B.g_index(B.group().element(e));
    if (gi != 0) decorations.push_back(gi);
  }
  const std::size_t n = B.r_dimension();
  const std::size_t d = decorations.size();
  const std::size_t total = n * n * d * d;
  auto decode = [&](std::size_t k) {
    const std::size_t d2 = k % d;
    const std::size_t d1 = (k / d) % d;
    const std::size_t y = (k / (d * d)) % n;
    const std::size_t x = k / (d * d * n);
    return std::pair(B.index(x, decorations[d1]), B.index(y, decorations[d2]));
  };
  auto direct = [&](BasisIndex a, BasisIndex b) {
    const auto da = C.comultiply(AlgebraElement(a, B.one()));
    const auto db = C.comultiply(AlgebraElement(b, B.one()));
    CyclotomicScalar s = B.zero();
    for (const auto& [ka, ca] : da)
      for (const auto& [kb, cb] : db) {
        const auto fv = f.evaluate_basis(ka.first, kb.first);
        if (fv.is_zero()) continue;
        const auto gv = g.evaluate_basis(ka.second, kb.second);
        if (gv.is_zero()) continue;
        s.add_product(ca * cb, fv * gv);
      }
    return s;
  };
  const std::size_t bad = parallel_find_first(total, jobs, [&](std::size_t k) {
    const auto [a, b] = decode(k);
    return !(direct(a, b) == h.evaluate_basis(a, b));
  });
  Report report;
  if (bad < total) {
    const auto [a, b] = decode(bad);
    CheckResult r{"convolution agrees with its extension rule", false, {{"left", B.render(a)}, {"right", B.render(b)}}, direct(a, b),
                  h.evaluate_basis(a, b), "direct value vs tabulated value"};
    report.add(std::move(r));
  } else {
    report.add("convolution agrees with its extension rule", true, {{"pairs", total}});
  }
  return report;
}

BilinearFunctional convolution_inverse(const BilinearFunctional& f, int jobs) {
  if (!f.at(0, 0).is_one()) throw PreconditionError("convolution_inverse: f(1 (x) 1) must be 1");
  if (!f.is_unital()) throw PreconditionError("convolution_inverse: functional is not unital");
  const Basis& B = f.basis();
  int cap = 2;
  for (int i = 0; i < B.theta(); ++i) cap += 2 * (B.r(i) - 1);
  const auto unit = BilinearFunctional::epsilon(f.coalgebra_ptr());
  const auto d = unit - f;
  auto sum = unit;
  auto power = unit;
  for (int k = 1; k <= cap; ++k) {
    power = convolve(power, d, jobs);
    if (power.support().empty()) return sum;
    sum += power;
  }
  throw CertificationError("convolution_inverse: Neumann series did not terminate within " + std::to_string(cap) + " terms");
}

Report cocycle_check(const BilinearFunctional& f, const ProductTable& m, const CocycleOptions& options) {
  require_compatible(f, m);
  const Basis& B = f.basis();
  Report report;
  report.add("unital", f.is_unital());
  report.append(certify_extension_rule(f));

  std::vector<BasisIndex> domain;
  if (options.slow) {
    for (BasisIndex b = 0; b < B.dimension(); ++b) domain.push_back(b);
  } else {
    for (std::size_t r = 0; r < B.r_dimension(); ++r) domain.push_back(B.index(r, 0));
  }
  const std::size_t n = domain.size();
  std::vector<AlgebraElement> q(n * n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] = half_product(f, m, domain[i], domain[j]);
  });

  auto sides = [&](std::size_t k) {
    const std::size_t i = k / (n * n);
    const std::size_t j = (k / n) % n;
    const std::size_t l = k % n;
    return CocycleSides{left_side(f, domain[i], q[j * n + l]), right_side(f, q[i * n + j], domain[l])};
  };
  const std::size_t total = n * n * n;
  const std::size_t bad = parallel_find_first(total, options.jobs, [&](std::size_t k) {
    const std::size_t i = k / (n * n);
    const std::size_t j = (k / n) % n;
    const std::size_t l = k % n;
    if (q[j * n + l].empty() && q[i * n + j].empty()) return false;
    const auto s = sides(k);
    return !(s.lhs == s.rhs);
  });
  const std::string name = "cocycle condition";
  if (bad < total) {
    const auto s = sides(bad);
    CheckResult r{name,
                  false,
                  {{"x", B.render(domain[bad / (n * n)])}, {"y", B.render(domain[(bad / n) % n])}, {"z", B.render(domain[bad % n])}},
                  s.lhs,
                  s.rhs,
                  options.slow ? "all basis triples" : "R-monomial triples"};
    report.add(std::move(r));
  } else {
    report.add(name, true, {{"triples", total}, {"slow", options.slow}});
  }
  return report;
}

CocycleSides cocycle_sides(const BilinearFunctional& f, const ProductTable& m, BasisIndex x, BasisIndex y, BasisIndex z) {
  require_compatible(f, m);
  return {left_side(f, x, half_product(f, m, y, z)), right_side(f, half_product(f, m, x, y), z)};
}

FunctionalComparison functionals_equal(const BilinearFunctional& f, const BilinearFunctional& g) {
  require_compatible(f, g);
  FunctionalComparison out;
  const std::size_t n = f.basis().r_dimension();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(f.at(x, y) == g.at(x, y))) out.differences.emplace_back(x, y);
  out.equal = out.differences.empty();
  return out;
}

}  // namespace qlift
