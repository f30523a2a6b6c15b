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

#include "qlift/deform.hpp"

#include <algorithm>
#include <utility>

#include "qlift/errors.hpp"
#include "qlift/parallel.hpp"

namespace qlift {

namespace {

std::vector<int> zero_powers(const Basis& B) { return std::vector<int>(static_cast<std::size_t>(B.theta()), 0); }

std::size_t power_of(const Basis& B, int i, int n) {
  auto p = zero_powers(B);
  p[static_cast<std::size_t>(i)] = n;
  return B.r_index(p);
}

AlgebraElement r_element(const Basis& B, std::size_t r) { return AlgebraElement(B.index(r, 0), B.one()); }

/// c (1 - g).
AlgebraElement one_minus(const Basis& B, const CyclotomicScalar& c, std::size_t g) {
  AlgebraElement u(B.index(0, 0), c);
  u.add(B.index(0, g), -c);
  return u;
}

std::string index_name(int i, int j) {
  if (j < 0) return std::to_string(i + 1);
  if (i < 9 && j < 9) return std::to_string(i + 1) + std::to_string(j + 1);
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

nlohmann::json pair_json(const Basis& B, std::size_t x, std::size_t y) {
  return {{"left", B.render_r(x)}, {"right", B.render_r(y)}};
}

bool is_identity(const Group& G, const GroupElement& g) { return G.is_identity(g); }

}  // namespace

Deformation::Deformation(LiftingPresentation p, std::size_t cap, int jobs)
    : radford_(HopfAlgebra::radford(p, cap)), lifting_(std::move(p), radford_.coalgebra()), jobs_(std::max(1, jobs)) {}

BilinearFunctional build_gamma_i(const Deformation& ctx, int i, std::optional<CyclotomicScalar> value) {
  const auto& p = ctx.presentation();
  if (i < 0 || i >= p.theta()) throw PreconditionError("gamma_i: index out of range");
  const CyclotomicScalar v = value ? *value : p.a(i);
  BilinearFunctional f = ctx.epsilon();
  if (v.is_zero()) return f;
  if (!p.group().is_trivial(p.group().char_pow(p.chi(i), p.r(i))))
    throw PreconditionError("gamma_" + index_name(i, -1) + ": chi_i^r_i != eps");
  const Basis& B = ctx.basis();
  for (int m = 1; m < B.r(i); ++m) f.set(power_of(B, i, m), power_of(B, i, B.r(i) - m), v);
  return f;
}

BilinearFunctional build_gamma_ij(const Deformation& ctx, int i, int j, std::optional<CyclotomicScalar> value) {
  const auto& p = ctx.presentation();
  if (i < 0 || j >= p.theta() || i >= j) throw PreconditionError("gamma_ij: need 0 <= i < j < theta");
  const CyclotomicScalar v = value ? *value : p.a_off(i, j);
  BilinearFunctional f = ctx.epsilon();
  if (v.is_zero()) return f;
  const auto& G = p.group();
  if (!G.is_trivial(G.char_mul(p.chi(i), p.chi(j))))
    throw PreconditionError("gamma_" + index_name(i, j) + ": chi_i chi_j != eps");
  const Basis& B = ctx.basis();
  if (B.r(i) != B.r(j)) throw PreconditionError("gamma_" + index_name(i, j) + ": r_i != r_j");
  const CyclotomicScalar q = p.q(i);
  CyclotomicScalar vm = B.one();
  for (int m = 1; m < B.r(i); ++m) {
    vm *= v;
    f.set(power_of(B, j, m), power_of(B, i, m), q_factorial(m, q) * vm);
  }
  return f;
}

std::string CocycleFactor::name() const { return "γ" + index_name(i, j); }

std::string ComponentPlan::render() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "∗";
    s += f.name();
  }
  return s;
}

std::string ComponentCocyclePlan::render() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += ", ";
    s += "{";
    for (std::size_t k = 0; k < c.vertices.size(); ++k) s += (k ? "," : "") + std::to_string(c.vertices[k] + 1);
    s += "}: " + c.render();
  }
  return s;
}

nlohmann::json ComponentCocyclePlan::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : components) {
    nlohmann::json vs = nlohmann::json::array();
    for (int v : c.vertices) vs.push_back(v + 1);
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : c.factors) fs.push_back({{"factor", f.name()}, {"trivial", f.trivial}});
    out.push_back({{"vertices", vs}, {"factors", fs}, {"product", c.render()}});
  }
  return out;
}

ComponentCocyclePlan plan_alpha(const LiftingPresentation& p) {
  ComponentCocyclePlan plan;
  for (const auto& comp : connected_components(p).components) {
    ComponentPlan c;
    c.vertices = comp;
    for (std::size_t u = 0; u < comp.size(); ++u)
      for (std::size_t v = u + 1; v < comp.size(); ++v)
        c.factors.push_back({comp[u], comp[v], p.a_off(comp[u], comp[v]).is_zero()});
    for (int v : comp) c.factors.push_back({v, -1, p.a(v).is_zero()});
    plan.components.push_back(std::move(c));
  }
  return plan;
}

AlphaResult build_alpha(const Deformation& ctx, bool certify) {
  AlphaResult out{ctx.epsilon(), plan_alpha(ctx.presentation()), {}};
  for (const auto& comp : out.plan.components) {
    for (const auto& f : comp.factors) {
      if (f.trivial) continue;
      auto g = f.diagonal() ? build_gamma_i(ctx, f.i) : build_gamma_ij(ctx, f.i, f.j);
      out.alpha = convolve(out.alpha, g, ctx.jobs());
    }
  }
  if (certify) {
    out.certification = cocycle_check(out.alpha, ctx.radford().multiplication(), {false, ctx.jobs()});
    if (!out.certification.ok()) {
      const auto* bad = out.certification.first_failure();
      throw CertificationError("alpha failed certification: " + bad->check + " " + bad->witness.dump());
    }
  }
  return out;
}

BilinearFunctional alpha_closed_form_quantum_plane(const Deformation& ctx) {
  const auto& p = ctx.presentation();
  if (p.theta() != 2) throw PreconditionError("closed form requires theta = 2");
  const Basis& B = ctx.basis();
  const CyclotomicScalar q = B.chi_value(B.letter(0), B.generator(0));
  const CyclotomicScalar c12 = B.chi_value(B.letter(0), B.generator(1));
  const CyclotomicScalar a = p.a_off(0, 1);
  const CyclotomicScalar& a1 = p.a(0);
  const CyclotomicScalar& a2 = p.a(1);
  const int r1 = B.r(0);
  const int r2 = B.r(1);
  const CyclotomicScalar zero = B.zero();
  auto fact = [&](int n) { return n < 0 ? zero : q_factorial(n, q); };
  auto binom = [&](int n, int k) { return q_binomial(n, k, q); };

  auto value = [&](int i, int k, int m, int t) -> CyclotomicScalar {
    if (i == 0 && k == 0) return (m == 0 && t == 0) ? B.one() : zero;
    if (m == 0 && t == 0) return zero;
    if (k == 0 && t == 0) return i + m == r1 ? a1 : zero;
    if (i == 0 && m == 0) return k + t == r2 ? a2 : zero;
    if (k == 0 && m == 0) return zero;
    if (i == 0 && t == 0) return k == m ? fact(m) * a.pow(m) : zero;
    if (k == 0 || m == 0) return zero;
    if (i == 0) return k + t == r2 + m ? binom(k, m) * fact(m) * a.pow(m) * a2 : zero;
    if (t == 0) return i + m == r1 + k ? binom(m, k) * fact(k) * a.pow(k) * a1 : zero;
    if (!a.is_zero()) {
      const int r = r1;
      if (i + m != k + t || i + m < r) return zero;
      return fact(i + m - r) * binom(k, r - t) * binom(m, r - i) * q.pow(static_cast<long>(i) * t) * a.pow(i + m - r) * a1 * a2;
    }
    return (i + m == r1 && k + t == r2) ? c12.pow(static_cast<long>(i) * t) * a1 * a2 : zero;
  };

  BilinearFunctional f(ctx.coalgebra());
  const std::size_t n = B.r_dimension();
  for (std::size_t x = 0; x < n; ++x) {
    const auto& px = B.powers(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto& py = B.powers(y);
      f.set(x, y, value(px[0], px[1], py[0], py[1]));
    }
  }
  return f;
}

TwistedAlgebra::TwistedAlgebra(const Deformation& ctx, BilinearFunctional gamma)
    : ProductTable(ctx.radford().basis_ptr()),
      gamma_(std::move(gamma)),
      gamma_inverse_(convolution_inverse(gamma_, ctx.jobs())),
      product_(ctx.radford().multiplication_ptr()),
      coalgebra_(ctx.coalgebra()) {
  const Basis& B = *basis_;
  const std::size_t n = B.r_dimension();
  parallel_for(n, ctx.jobs(), [&](std::size_t x) {
    const auto dx = coalgebra_->delta2(x);
    for (std::size_t y = 0; y < n; ++y) {
      AlgebraElement out;
      for (const auto& t : coalgebra_->delta2(y)) {
        for (const auto& s : dx) {
          const auto& gv = gamma_.at(s.r1, t.r1);
          if (gv.is_zero()) continue;
          const auto& iv = gamma_inverse_.at(s.r3, t.r3);
          if (iv.is_zero()) continue;
          product_->accumulate(out, B.index(s.r2, s.g2), B.index(t.r2, t.g2), s.coef * t.coef * B.chi_value(t.r1, s.g1) * gv * iv);
        }
      }
      table_[x * n + y] = std::move(out);
    }
  });
}

AlgebraElement TwistedAlgebra::direct_product(BasisIndex a, BasisIndex b) const {
  const Basis& B = *basis_;
  const auto u = coalgebra_->comultiply_twice(AlgebraElement(a, B.one()));
  const auto v = coalgebra_->comultiply_twice(AlgebraElement(b, B.one()));
  AlgebraElement out;
  for (const auto& [k, ck] : u) {
    for (const auto& [l, cl] : v) {
      const auto gv = gamma_.evaluate_basis(k[0], l[0]);
      if (gv.is_zero()) continue;
      const auto iv = gamma_inverse_.evaluate_basis(k[2], l[2]);
      if (iv.is_zero()) continue;
      product_->accumulate(out, k[1], l[1], ck * cl * gv * iv);
    }
  }
  return out;
}

TwistedAlgebra twist(const Deformation& ctx, const BilinearFunctional& gamma, const TwistOptions& options) {
  Report pre;
  if (options.check_precondition) {
    pre = cocycle_check(gamma, ctx.radford().multiplication(), {options.full_basis, ctx.jobs()});
    if (!pre.ok()) {
      const auto* bad = pre.first_failure();
      throw PreconditionError("twist: gamma is not a cocycle (" + bad->check + " " + bad->witness.dump() + ")");
    }
  }
  TwistedAlgebra T(ctx, gamma);
  T.construction_report_ = std::move(pre);
  if (options.check_associativity) {
    auto assoc = check_associativity(T, options.full_basis, ctx.jobs(), "twisted product associative");
    T.construction_report_.append(assoc);
    if (!assoc.ok()) {
      const auto* bad = assoc.first_failure();
      throw CertificationError("twisted product failed: " + bad->check + " " + bad->witness.dump());
    }
  }
  if (options.check_bialgebra) T.construction_report_.append(check_bialgebra(*ctx.coalgebra(), T, options.full_basis, ctx.jobs()));
  return T;
}

Report verify_twist_is_lifting(const Deformation& ctx, const ProductTable& T) {
  const Basis& B = ctx.basis();
  if (!B.same_shape(T.basis())) throw PreconditionError("verify_twist_is_lifting: product built on a different basis");
  const auto& p = ctx.presentation();
  const int theta = B.theta();
  Report report;

  {
    const std::string name = "basis: x_i^m . x_i = x_i^{m+1}";
    nlohmann::json bad;
    for (int i = 0; i < theta && bad.is_null(); ++i) {
      for (int m = 0; m + 1 < B.r(i) && bad.is_null(); ++m) {
        const auto& got = T.r_product(power_of(B, i, m), B.letter(i));
        if (!(got == r_element(B, power_of(B, i, m + 1))))
          bad = {{"i", i + 1}, {"m", m}, {"product", B.render(got)}};
      }
    }
    report.add(name, bad.is_null(), bad.is_null() ? nlohmann::json::object() : bad);
  }
  {
    const std::string name = "basis: (x_1^n_1 ... x_{s-1}^n_{s-1}) . x_s^n_s = x_1^n_1 ... x_s^n_s";
    nlohmann::json bad;
    for (std::size_t x = 0; x < B.r_dimension() && bad.is_null(); ++x) {
      const auto& px = B.powers(x);
      int top = theta;
      while (top > 0 && px[static_cast<std::size_t>(top - 1)] == 0) --top;
      for (int s = top; s < theta && bad.is_null(); ++s) {
        for (int n = 1; n < B.r(s) && bad.is_null(); ++n) {
          auto pw = px;
          pw[static_cast<std::size_t>(s)] = n;
          const auto& got = T.r_product(x, power_of(B, s, n));
          if (!(got == r_element(B, B.r_index(pw))))
            bad = {{"left", B.render_r(x)}, {"right", B.render_r(power_of(B, s, n))}, {"product", B.render(got)}};
        }
      }
    }
    report.add(name, bad.is_null(), bad.is_null() ? nlohmann::json::object() : bad);
  }
  {
    const std::string name = "relation: x_i^m . x_i^{r_i - m} = a_i (1 - g_i^r_i)";
    nlohmann::json bad;
    for (int i = 0; i < theta && bad.is_null(); ++i) {
      const std::size_t gr = B.g_index(p.group().power(p.g(i), B.r(i)));
      const auto rhs = one_minus(B, p.a(i), gr);
      for (int m = B.r(i) - 1; m >= 1 && bad.is_null(); --m) {
        const auto& got = T.r_product(power_of(B, i, m), power_of(B, i, B.r(i) - m));
        if (!(got == rhs)) bad = {{"i", i + 1}, {"m", m}, {"lhs", B.render(got)}, {"rhs", B.render(rhs)}};
      }
    }
    report.add(name, bad.is_null(), bad.is_null() ? nlohmann::json::object() : bad);
  }
  {
    const std::string name = "relation: x_j . x_i - chi_i(g_j) x_i . x_j = a_ij (1 - g_i g_j)";
    nlohmann::json bad;
    for (int i = 0; i < theta && bad.is_null(); ++i) {
      for (int j = i + 1; j < theta && bad.is_null(); ++j) {
        AlgebraElement lhs = T.r_product(B.letter(j), B.letter(i));
        lhs.add_scaled(T.r_product(B.letter(i), B.letter(j)), -B.chi_value(B.letter(i), B.generator(j)));
        const auto rhs = one_minus(B, p.a_off(i, j), B.g_mul(B.generator(i), B.generator(j)));
        if (!(lhs == rhs)) bad = {{"i", i + 1}, {"j", j + 1}, {"lhs", B.render(lhs)}, {"rhs", B.render(rhs)}};
      }
    }
    report.add(name, bad.is_null(), bad.is_null() ? nlohmann::json::object() : bad);
  }
  {
    const std::string name = "product agrees with the lifting on R-monomials";
    const auto& m = ctx.lifting().multiplication();
    const std::size_t n = B.r_dimension();
    const std::size_t k = parallel_find_first(n * n, ctx.jobs(), [&](std::size_t k) {
      return !(T.r_product(k / n, k % n) == m.r_product(k / n, k % n));
    });
    if (k < n * n) {
      auto w = pair_json(B, k / n, k % n);
      w["product"] = B.render(T.r_product(k / n, k % n));
      w["lifting"] = B.render(m.r_product(k / n, k % n));
      report.add(name, false, w);
    } else {
      report.add(name, true);
    }
  }
  return report;
}

Report check_gamma_hypotheses(const Deformation& ctx, const BilinearFunctional& gamma) {
  const Basis& B = ctx.basis();
  const auto& p = ctx.presentation();
  const int theta = B.theta();
  Report report;
  auto add = [&](const std::string& name, std::optional<std::pair<std::size_t, std::size_t>> bad, const CyclotomicScalar& want) {
    if (!bad) {
      report.add(name, true);
      return;
    }
    CheckResult r{name, false, pair_json(B, bad->first, bad->second), gamma.at(bad->first, bad->second), want, {}};
    report.add(std::move(r));
  };
  auto eps = [&](std::size_t x, std::size_t y) { return (x == 0 && y == 0) ? B.one() : B.zero(); };

  {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (int i = 0; i < theta && !bad; ++i)
      for (int n = 0; n < B.r(i) && !bad; ++n)
        for (int m = 0; n + m <= B.r(i) - 1 && !bad; ++m) {
          const auto x = power_of(B, i, n), y = power_of(B, i, m);
          if (!(gamma.at(x, y) == eps(x, y))) bad = std::make_pair(x, y);
        }
    add("gamma1: gamma(x_i^n (x) x_i^m) = eps eps for n + m < r_i", bad, bad ? eps(bad->first, bad->second) : B.zero());
  }
  {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t x = 0; x < B.r_dimension() && !bad; ++x) {
      const auto& px = B.powers(x);
      int top = theta;
      while (top > 0 && px[static_cast<std::size_t>(top - 1)] == 0) --top;
      for (int s = std::max(top, 1); s < theta && !bad; ++s)
        for (int n = 0; n < B.r(s) && !bad; ++n) {
          const auto y = power_of(B, s, n);
          if (!(gamma.at(x, y) == eps(x, y))) bad = std::make_pair(x, y);
        }
    }
    add("gamma2: gamma(X (x) x_s^n) = eps(X) eps(x_s^n) for X in generators below s", bad,
        bad ? eps(bad->first, bad->second) : B.zero());
  }
  {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    CyclotomicScalar want = B.zero();
    for (int i = 0; i < theta && !bad; ++i) {
      const auto x = power_of(B, i, B.r(i) - 1);
      if (!(gamma.at(x, B.letter(i)) == p.a(i))) {
        bad = std::make_pair(x, B.letter(i));
        want = p.a(i);
      }
    }
    add("gamma3: gamma(x_i^{r_i - 1} (x) x_i) = a_i", bad, want);
  }
  {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    CyclotomicScalar want = B.zero();
    for (int i = 0; i < theta && !bad; ++i)
      for (int j = i + 1; j < theta && !bad; ++j)
        if (!(gamma.at(B.letter(j), B.letter(i)) == p.a_off(i, j))) {
          bad = std::make_pair(B.letter(j), B.letter(i));
          want = p.a_off(i, j);
        }
    add("gamma4: gamma(x_j (x) x_i) = a_ij for i < j", bad, want);
  }
  return report;
}

LambdaPiM lambda_pi_m(const Deformation& ctx, const ProductTable& T) {
  const Basis& B = ctx.basis();
  if (!B.same_shape(T.basis())) throw PreconditionError("lambda_pi_m: product built on a different basis");
  const std::size_t n = B.r_dimension();
  LambdaPiM out{BilinearFunctional(ctx.coalgebra()), std::vector<AlgebraElement>(n * n), {}};
  std::vector<CyclotomicScalar> values(n * n);
  parallel_for(n, ctx.jobs(), [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.xi[x * n + y] = project_pi(B, T.r_product(x, y));
      values[x * n + y] = integral_lambda(B, out.xi[x * n + y]);
    }
  });
  for (std::size_t k = 0; k < n * n; ++k) out.table.set(k / n, k % n, std::move(values[k]));
  out.certification = certify_extension_rule(out.table, "lambda pi m");
  return out;
}

std::vector<ConditionVerdict> lambdaxi_conditions(const LiftingPresentation& p) {
  const auto& G = p.group();
  std::vector<ConditionVerdict> out;
  const int theta = p.theta();
  auto gr = [&](int i) { return G.power(p.g(i), p.r(i)); };

  if (theta == 2) {
    const bool a0 = p.a_off(0, 1).is_zero();
    const bool z1 = p.a(0).is_zero();
    const bool z2 = p.a(1).is_zero();
    const auto g12 = G.mul(p.g(0), p.g(1));
    const int r = p.r(0);

    out.push_back({"(i) a = 0 and at most one of a_1, a_2 nonzero", true, a0 && (z1 || z2), {}});

    const auto prod = G.mul(gr(0), gr(1));
    out.push_back({"(ii) a = 0, a_1 a_2 != 0, g_1^r_1 g_2^r_2 != 1", true, a0 && !z1 && !z2 && !is_identity(G, prod),
                   {{"g_1^r_1 g_2^r_2", G.render(prod)}}});

    const auto g12r = G.power(g12, r);
    out.push_back({"(iii) a != 0, r odd or r = 2, (g_1 g_2)^r != 1", true,
                   !a0 && (r % 2 == 1 || r == 2) && !is_identity(G, g12r), {{"(g_1 g_2)^r", G.render(g12r)}}});

    ConditionVerdict iv{"(iv) a != 0, r = 2r' > 2, (g_1 g_2)^{t r'} != 1 for t = 1, 2, 3, (g_1 g_2)^{r'} g_2^r != 1, "
                        "g_1^r (g_1 g_2)^{r'} != 1",
                        true, false, {}};
    if (!a0 && r % 2 == 0 && r > 2) {
      const int rp = r / 2;
      bool holds = true;
      for (int t = 1; t <= 3; ++t) {
        const auto e = G.power(g12, static_cast<long>(t) * rp);
        iv.witness["(g_1 g_2)^" + std::to_string(t * rp)] = G.render(e);
        holds = holds && !is_identity(G, e);
      }
      const auto e1 = G.mul(G.power(g12, rp), G.power(p.g(1), r));
      const auto e2 = G.mul(G.power(p.g(0), r), G.power(g12, rp));
      iv.witness["(g_1 g_2)^{r'} g_2^r"] = G.render(e1);
      iv.witness["g_1^r (g_1 g_2)^{r'}"] = G.render(e2);
      iv.holds = holds && !is_identity(G, e1) && !is_identity(G, e2);
    }
    out.push_back(std::move(iv));
  } else {
    for (const char* name : {"(i)", "(ii)", "(iii)", "(iv)"}) out.push_back({std::string(name) + " quantum plane only", false, false, {}});
  }

  ConditionVerdict cor{"corollary: all a_ij = 0 and prod_{j in J} g_j^r_j != 1 for every nonempty J within {i : a_i != 0}",
                       true, false, {}};
  bool holds = p.nonzero_off_diagonal().empty();
  std::vector<int> support;
  for (int i = 0; i < theta; ++i)
    if (!p.a(i).is_zero()) support.push_back(i);
  if (holds && support.size() < 20) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << support.size()) && holds; ++mask) {
      GroupElement e = G.identity();
      for (std::size_t b = 0; b < support.size(); ++b)
        if (mask >> b & 1u) e = G.mul(e, gr(support[b]));
      if (is_identity(G, e)) {
        holds = false;
        nlohmann::json J = nlohmann::json::array();
        for (std::size_t b = 0; b < support.size(); ++b)
          if (mask >> b & 1u) J.push_back(support[b] + 1);
        cor.witness["J"] = J;
      }
    }
  } else if (holds) {
    holds = false;
    cor.applicable = false;
  }
  cor.holds = holds;
  out.push_back(std::move(cor));
  return out;
}

LambdaXiAnalysis check_lambdaxi_conditions(const Deformation& ctx) {
  LambdaXiAnalysis out;
  out.conditions = lambdaxi_conditions(ctx.presentation());
  for (const auto& c : out.conditions)
    if (c.applicable && c.holds) {
      out.holding = c.name;
      break;
    }
  auto alpha = build_alpha(ctx, true);
  const TwistedAlgebra T = twist(ctx, alpha.alpha, {false, true, false});
  out.lambda = lambda_pi_m(ctx, T);
  out.comparison = functionals_equal(out.lambda->table, alpha.alpha);
  out.lambda_cocycle = cocycle_check(out.lambda->table, ctx.radford().multiplication(), {false, ctx.jobs()});

  const Basis& B = ctx.basis();
  const auto& inv = T.gamma_inverse();
  const std::size_t n = B.r_dimension();
  out.rho_identity = true;
  for (std::size_t x = 0; x < n && out.rho_identity; ++x)
    for (std::size_t y = 0; y < n && out.rho_identity; ++y) {
      const auto c = coaction_rho(B, x, y);
      const CyclotomicScalar lhs = B.group().is_identity(c.degree) ? inv.at(c.left, c.right) : B.zero();
      const bool unit = x == 0 && y == 0;
      if (!(lhs == (unit ? B.one() : B.zero()))) out.rho_identity = false;
    }
  out.alpha = std::move(alpha.alpha);
  return out;
}

Report LambdaXiAnalysis::to_report() const {
  Report report;
  nlohmann::json hyp = nlohmann::json::object();
  for (const auto& c : conditions) {
    nlohmann::json v = {{"holds", c.holds}, {"applicable", c.applicable}};
    if (!c.witness.empty()) v["witness"] = c.witness;
    hyp[c.name] = v;
  }
  report.add("hypotheses", true, hyp, holding ? "holds: " + *holding : "no listed condition holds");
  if (!lambda || !alpha) return report;
  report.append(lambda->certification);

  const Basis& B = alpha->basis();
  nlohmann::json cmp = {{"equal", comparison.equal}, {"differences", comparison.differences.size()}};
  if (auto d = comparison.first()) {
    cmp["first"] = pair_json(B, d->first, d->second);
    cmp["first"]["alpha"] = alpha->at(d->first, d->second).to_string();
    cmp["first"]["lambda pi m"] = lambda->table.at(d->first, d->second).to_string();
  }
  if (holding) report.add("lambda pi m = alpha under the holding condition", comparison.equal, cmp);
  else report.add("lambda pi m compared with alpha", true, cmp);

  report.add("lambda pi m = alpha if and only if (lambda (x) alpha^{-1}) rho = eps", rho_identity == comparison.equal,
             {{"rho identity", rho_identity}, {"equal", comparison.equal}});

  nlohmann::json coc = {{"cocycle", lambda_cocycle.ok()}};
  if (const auto* bad = lambda_cocycle.first_failure()) {
    coc["check"] = bad->check;
    coc["witness"] = bad->witness;
    if (bad->lhs) coc["lhs"] = bad->lhs->to_string();
    if (bad->rhs) coc["rhs"] = bad->rhs->to_string();
  }
  report.add("lambda pi m cocycle verdict", !comparison.equal || lambda_cocycle.ok(), coc);
  return report;
}

CommutationResult check_commutation(const Deformation& ctx) {
  const auto& p = ctx.presentation();
  const Basis& B = ctx.basis();
  struct Factor {
    CocycleFactor id;
    BilinearFunctional f;
  };
  std::vector<Factor> factors;
  for (const auto& od : p.nonzero_off_diagonal()) factors.push_back({{od.i, od.j, false}, build_gamma_ij(ctx, od.i, od.j)});
  for (int i = 0; i < p.theta(); ++i)
    if (!p.a(i).is_zero()) factors.push_back({{i, -1, false}, build_gamma_i(ctx, i)});

  auto indices = [](const CocycleFactor& f) {
    std::vector<int> v{f.i};
    if (!f.diagonal()) v.push_back(f.j);
    return v;
  };
  auto all_r2 = [&](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [&](int i) { return B.r(i) == 2; });
  };
  auto predicted = [&](const CocycleFactor& u, const CocycleFactor& v) {
    if (u.diagonal() && v.diagonal()) return true;
    const auto iu = indices(u), iv = indices(v);
    bool disjoint = true;
    for (int a : iu)
      if (std::find(iv.begin(), iv.end(), a) != iv.end()) disjoint = false;
    if (disjoint) return true;
    std::vector<int> both = iu;
    both.insert(both.end(), iv.begin(), iv.end());
    return all_r2(both);
  };
  auto cocycle_json = [&](const BilinearFunctional& f) {
    const auto rep = cocycle_check(f, ctx.radford().multiplication(), {false, ctx.jobs()});
    nlohmann::json j = {{"cocycle", rep.ok()}};
    if (const auto* bad = rep.first_failure()) {
      j["witness"] = bad->witness;
      if (bad->lhs) j["lhs"] = bad->lhs->to_string();
      if (bad->rhs) j["rhs"] = bad->rhs->to_string();
    }
    return j;
  };

  CommutationResult out;
  const std::size_t k = factors.size();
  for (const auto& f : factors) out.factors.push_back(f.id.name());
  out.matrix.assign(k, std::vector<bool>(k, true));
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) {
      const auto uv = convolve(factors[u].f, factors[v].f, ctx.jobs());
      const auto vu = convolve(factors[v].f, factors[u].f, ctx.jobs());
      const auto cmp = functionals_equal(uv, vu);
      out.matrix[u][v] = out.matrix[v][u] = cmp.equal;
      const bool pred = predicted(factors[u].id, factors[v].id);
      const std::string nu = out.factors[u], nv = out.factors[v];
      nlohmann::json w = {{"commute", cmp.equal}, {"predicted", pred ? "commute" : "no prediction"}};
      if (auto d = cmp.first()) {
        w["first difference"] = pair_json(B, d->first, d->second);
        w["first difference"][nu + "∗" + nv] = uv.at(d->first, d->second).to_string();
        w["first difference"][nv + "∗" + nu] = vu.at(d->first, d->second).to_string();
      }
      w[nu + "∗" + nv] = cocycle_json(uv);
      w[nv + "∗" + nu] = cocycle_json(vu);
      out.report.add(nu + "∗" + nv + " = " + nv + "∗" + nu, !pred || cmp.equal, w);
    }
  }
  return out;
}

}  // namespace qlift
