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

#include <gtest/gtest.h>

#include "qlift/deform.hpp"
#include "qlift/errors.hpp"
#include "qlift/io.hpp"
#include "support.hpp"

namespace qlift {
namespace {

using testing::data_path;

Deformation load(const char* name) { return Deformation(load_presentation(data_path(name)), kDefaultDimensionCap, 4); }

std::size_t mono(const Basis& B, std::vector<int> powers) { return B.r_index(powers); }

const char* kCorpus[] = {"c8.json",          "example_a.json",    "condition_ii.json", "condition_iii.json",
                         "condition_iv.json", "theta3_chain.json", "theta3_full.json",  "trivial.json"};

std::string failure_name(const Report& r) { return r.first_failure() ? r.first_failure()->check : std::string("none"); }

TEST(Gamma, DiagonalBuilder) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto& p = D.presentation();
  const auto g = build_gamma_i(D, 0);
  EXPECT_EQ(g.at(B.letter(0), mono(B, {3, 0})), p.a(0));
  EXPECT_EQ(g.at(mono(B, {2, 0}), mono(B, {2, 0})), p.a(0));
  EXPECT_TRUE(g.at(B.letter(0), B.letter(0)).is_zero());
  EXPECT_TRUE(g.at(B.letter(1), mono(B, {0, 3})).is_zero());
  EXPECT_EQ(build_gamma_i(D, 0, B.zero()), D.epsilon());
  EXPECT_EQ(g.support().size(), 3u + 1u);
  EXPECT_THROW(build_gamma_i(D, 2), PreconditionError);
}

TEST(Gamma, OffDiagonalBuilder) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto& p = D.presentation();
  const auto a = p.a_off(0, 1), q = p.q(0);
  const auto g = build_gamma_ij(D, 0, 1);
  EXPECT_EQ(g.at(B.letter(1), B.letter(0)), a);
  EXPECT_EQ(g.at(mono(B, {0, 2}), mono(B, {2, 0})), (B.one() + q) * a * a);
  EXPECT_EQ(g.at(mono(B, {0, 3}), mono(B, {3, 0})), q_factorial(3, q) * a.pow(3));
  EXPECT_TRUE(g.at(B.letter(0), B.letter(1)).is_zero());
  EXPECT_THROW(build_gamma_ij(D, 1, 0), PreconditionError);
  // a_12 != 0 needs chi_1 chi_2 = eps.
  Group G({4, 4});
  const Deformation E(LiftingPresentation(G, {G.element({1, 0}), G.element({0, 1})}, {G.character({2, 0}), G.character({0, 2})},
                                          {CyclotomicScalar::zero(4), CyclotomicScalar::zero(4)}, {}));
  EXPECT_THROW(build_gamma_ij(E, 0, 1, E.basis().one()), PreconditionError);
}

TEST(Plan, Shapes) {
  EXPECT_EQ(plan_alpha(load_presentation(data_path("c8.json"))).render(), "{1,2}: γ12∗γ1∗γ2");
  EXPECT_EQ(plan_alpha(load_presentation(data_path("theta3_full.json"))).render(), "{1,2,3}: γ12∗γ13∗γ23∗γ1∗γ2∗γ3");
  EXPECT_EQ(plan_alpha(load_presentation(data_path("condition_ii.json"))).render(), "{1}: γ1, {2}: γ2");
  const auto chain = plan_alpha(load_presentation(data_path("theta3_chain.json")));
  ASSERT_EQ(chain.components.size(), 1u);
  std::vector<std::string> nontrivial;
  for (const auto& f : chain.components[0].factors)
    if (!f.trivial) nontrivial.push_back(f.name());
  EXPECT_EQ(nontrivial, (std::vector<std::string>{"γ12", "γ23", "γ1", "γ3"}));
}

TEST(Alpha, TrivialLiftingGivesEpsilon) {
  const auto D = load("trivial.json");
  const auto res = build_alpha(D);
  EXPECT_EQ(res.alpha, D.epsilon());
  EXPECT_TRUE(res.certification.ok());
}

TEST(Alpha, CertifiedOnCorpus) {
  for (const char* f : kCorpus) {
    const auto D = load(f);
    ASSERT_LE(D.basis().dimension(), 256u);
    const auto res = build_alpha(D);
    EXPECT_TRUE(res.certification.ok()) << f << " " << failure_name(res.certification);
    EXPECT_TRUE(certify_extension_rule(res.alpha).ok());
  }
}

TEST(Alpha, ClosedFormQuantumPlane) {
  const testing::PlaneScalars cases[] = {{0, 0, 0}, {1, 2, 0}, {0, 3, 0}, {4, 0, 0}, {0, 0, 5},
                                         {0, 2, -1}, {3, 0, 2}, {1, -2, 3}, {7, 5, 3}};
  for (int r : {2, 3, 4})
    for (const auto& s : cases) {
      const Deformation D(testing::quantum_plane(r, s), kDefaultDimensionCap, 4);
      const auto cmp = functionals_equal(build_alpha(D, false).alpha, alpha_closed_form_quantum_plane(D));
      EXPECT_TRUE(cmp.equal) << "r=" << r << " a1=" << s.a1 << " a2=" << s.a2 << " a=" << s.a12;
    }
  for (const char* f : {"c8.json", "example_a.json", "condition_ii.json", "condition_iii.json", "condition_iv.json", "trivial.json"}) {
    const auto D = load(f);
    EXPECT_TRUE(functionals_equal(build_alpha(D, false).alpha, alpha_closed_form_quantum_plane(D)).equal) << f;
  }
  EXPECT_THROW(alpha_closed_form_quantum_plane(load("theta3_full.json")), PreconditionError);
}

TEST(Alpha, ClosedFormEntries) {
  {
    const auto D = load("example_a.json");
    const Basis& B = D.basis();
    const auto& p = D.presentation();
    const auto alpha = alpha_closed_form_quantum_plane(D);
    const int r = p.r(0);
    EXPECT_EQ(alpha.at(mono(B, {1, 1}), mono(B, {r - 1, r - 1})), p.q(0).inverse() * p.a(0) * p.a(1));
    for (int m = 0; m < r; ++m)
      for (int k = 1; k < r; ++k) EXPECT_TRUE(alpha.at(mono(B, {m, 0}), mono(B, {0, k})).is_zero());
  }
  {
    const auto D = load("c8.json");
    const Basis& B = D.basis();
    const auto& p = D.presentation();
    const auto q = p.q(0), a = p.a_off(0, 1);
    EXPECT_EQ(q, root_of_unity(8, 2));
    const auto expected = (q - B.one()) * a * a * p.a(0);
    EXPECT_EQ(q_binomial(3, 2, q) * q_factorial(2, q), q_factorial(3, q));
    EXPECT_EQ(alpha_closed_form_quantum_plane(D).at(mono(B, {3, 2}), mono(B, {3, 0})), expected);
    EXPECT_EQ(build_alpha(D).alpha.at(mono(B, {3, 2}), mono(B, {3, 0})), expected);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        EXPECT_EQ(build_alpha(D).alpha.at(mono(B, {0, m}), mono(B, {n, 0})), m == n ? q_factorial(m, q) * a.pow(m) : B.zero());
  }
}

TEST(Twist, EpsilonTwistIsUntwisted) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto T = twist(D, D.epsilon());
  const auto& mA = D.radford().multiplication();
  for (std::size_t x = 0; x < B.r_dimension(); ++x)
    for (std::size_t y = 0; y < B.r_dimension(); ++y) EXPECT_EQ(T.r_product(x, y), mA.r_product(x, y));
  const auto report = verify_twist_is_lifting(D, T);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(failure_name(report), "relation: x_i^m . x_i^{r_i - m} = a_i (1 - g_i^r_i)");
  EXPECT_TRUE(verify_twist_is_lifting(load("trivial.json"), twist(load("trivial.json"), load("trivial.json").epsilon())).ok());
}

TEST(Twist, DiagonalTwistGivesPowerRelation) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto& p = D.presentation();
  for (int i = 0; i < 2; ++i) {
    const auto T = twist(D, build_gamma_i(D, i));
    const std::size_t gr = B.g_index(p.group().power(p.g(i), p.r(i)));
    AlgebraElement expected(B.index(0, 0), p.a(i));
    expected.add(B.index(0, gr), -p.a(i));
    for (int m = 1; m < p.r(i); ++m) {
      std::vector<int> pm(2, 0), pn(2, 0);
      pm[static_cast<std::size_t>(i)] = m;
      pn[static_cast<std::size_t>(i)] = p.r(i) - m;
      EXPECT_EQ(T.r_product(B.r_index(pm), B.r_index(pn)), expected) << i << " " << m;
    }
  }
}

TEST(Twist, AlphaTwistIsTheLifting) {
  for (const char* f : kCorpus) {
    const auto D = load(f);
    const auto alpha = build_alpha(D).alpha;
    const auto T = twist(D, alpha, {true, true, false, true});
    EXPECT_TRUE(T.construction_report().ok()) << f << " " << failure_name(T.construction_report());
    const auto report = verify_twist_is_lifting(D, T);
    EXPECT_TRUE(report.ok()) << f << " " << failure_name(report);
    EXPECT_TRUE(check_gamma_hypotheses(D, alpha).ok()) << f;
    EXPECT_NE(report.find("relation: x_j . x_i - chi_i(g_j) x_i . x_j = a_ij (1 - g_i g_j)"), nullptr);
  }
}

TEST(Twist, FullBasisLawsOnSmallInstances) {
  std::vector<std::pair<std::string, Deformation>> cases;
  cases.emplace_back("plane r=2", Deformation(testing::quantum_plane(2, {1, 2, 3})));
  for (const char* f : {"theta3_full.json", "theta3_chain.json"}) cases.emplace_back(f, load(f));
  for (const auto& [f, D] : cases) {
    ASSERT_LE(D.basis().dimension(), 64u);
    const auto T = twist(D, build_alpha(D).alpha, {true, true, true, false});
    EXPECT_TRUE(T.construction_report().ok()) << f;
    const auto bi = check_bialgebra(*D.coalgebra(), T, true, 8);
    EXPECT_TRUE(bi.ok()) << f << " " << failure_name(bi);
  }
}

TEST(Twist, DirectProductMatchesTable) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto T = twist(D, build_alpha(D).alpha);
  for (BasisIndex a = 0; a < B.dimension(); a += 3)
    for (BasisIndex b = 0; b < B.dimension(); b += 5) EXPECT_EQ(T.direct_product(a, b), T.multiply_basis(a, b));
}

TEST(Twist, RejectsNonCocycle) {
  const auto D = load("c8.json");
  const auto bad = convolve(build_gamma_i(D, 0), build_gamma_ij(D, 0, 1));
  EXPECT_THROW(twist(D, bad), PreconditionError);
}

TEST(Twist, TamperedLiftingIsDetected) {
  auto j = load_json(data_path("c8.json"));
  const auto D = load("c8.json");
  const auto T = twist(D, build_alpha(D).alpha);
  for (const char* field : {"a", "a_off"}) {
    auto k = j;
    if (std::string(field) == "a") k["a"][0] = 6;
    else k["a_off"][0]["value"] = 4;
    const Deformation E(presentation_from_json(k));
    const auto report = verify_twist_is_lifting(E, T);
    EXPECT_FALSE(report.ok()) << field;
  }
}

TEST(Twist, IdenticalToRewritingProduct) {
  // Two basis-preserving products with the same relations coincide.
  for (const char* f : {"theta3_full.json", "theta3_chain.json", "c8.json"}) {
    const auto D = load(f);
    const Basis& B = D.basis();
    const auto T = twist(D, build_alpha(D).alpha);
    const auto& mB = D.lifting().multiplication();
    std::size_t differing = 0;
    for (std::size_t x = 0; x < B.r_dimension(); ++x)
      for (std::size_t y = 0; y < B.r_dimension(); ++y) differing += !(T.r_product(x, y) == mB.r_product(x, y));
    EXPECT_EQ(differing, 0u) << f;
  }
}

TEST(Hypotheses, FailForEpsilon) {
  const auto D = load("c8.json");
  const auto report = check_gamma_hypotheses(D, D.epsilon());
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.find("gamma3: gamma(x_i^{r_i - 1} (x) x_i) = a_i")->passed, false);
  EXPECT_EQ(report.find("gamma4: gamma(x_j (x) x_i) = a_ij for i < j")->passed, false);
}

TEST(LambdaPiM, ExampleA) {
  const auto D = load("example_a.json");
  const Basis& B = D.basis();
  const auto& p = D.presentation();
  const auto alpha = build_alpha(D).alpha;
  const auto L = lambda_pi_m(D, twist(D, alpha));
  EXPECT_TRUE(L.certification.ok());
  const int r = p.r(0);
  const auto x = mono(B, {1, 1}), y = mono(B, {r - 1, r - 1});
  const auto expected = p.q(0).inverse() * p.a(0) * p.a(1);
  EXPECT_EQ(alpha.at(x, y), expected);
  EXPECT_EQ(L.table.at(x, y), expected + expected);
  EXPECT_TRUE(L.table.at(0, 0).is_one());
  EXPECT_EQ(integral_lambda(B, L.xi_at(x, y)), L.table.at(x, y));
}

TEST(LambdaPiM, C8) {
  const auto D = load("c8.json");
  const Basis& B = D.basis();
  const auto& p = D.presentation();
  const auto alpha = build_alpha(D).alpha;
  const auto L = lambda_pi_m(D, twist(D, alpha));
  const auto x = mono(B, {3, 2}), y = mono(B, {3, 0});
  const auto a = p.a_off(0, 1);
  EXPECT_EQ(alpha.at(x, y), (p.q(0) - B.one()) * a * a * p.a(0));
  EXPECT_EQ(L.table.at(x, y), CyclotomicScalar::rational(8, -2) * p.a(0) * a * a);
  EXPECT_NE(L.table.at(x, y), alpha.at(x, y));
}

TEST(LambdaPiM, AnalysisOnCorpus) {
  struct Expect {
    const char* file;
    bool equal;
    const char* holding;  // prefix of the holding condition, or "" for none
  };
  const Expect cases[] = {{"example_a.json", false, ""},   {"c8.json", false, ""},          {"condition_ii.json", true, "(ii)"},
                          {"condition_iii.json", true, "(iii)"}, {"condition_iv.json", true, "(iv)"}, {"trivial.json", true, "(i)"}};
  for (const auto& c : cases) {
    const auto D = load(c.file);
    const auto an = check_lambdaxi_conditions(D);
    EXPECT_EQ(an.comparison.equal, c.equal) << c.file;
    EXPECT_EQ(an.rho_identity, an.comparison.equal) << c.file;
    if (*c.holding) {
      ASSERT_TRUE(an.holding.has_value()) << c.file;
      EXPECT_EQ(an.holding->rfind(c.holding, 0), 0u) << c.file << " " << *an.holding;
    } else {
      EXPECT_FALSE(an.holding.has_value()) << c.file;
    }
    EXPECT_TRUE(an.to_report().ok()) << c.file << " " << failure_name(an.to_report());
    EXPECT_TRUE(an.lambda->certification.ok()) << c.file;
    if (c.equal) {
      EXPECT_TRUE(an.lambda_cocycle.ok()) << c.file;
    }
  }
}

TEST(LambdaPiM, ExampleAWitnessesNoCondition) {
  const auto p = load_presentation(data_path("example_a.json"));
  const auto& G = p.group();
  EXPECT_TRUE(G.is_identity(G.power(G.mul(p.g(0), p.g(1)), p.r(0))));
  for (const auto& c : lambdaxi_conditions(p)) EXPECT_FALSE(c.holds) << c.name;
}

TEST(LambdaPiM, CorollaryForDiagonalScalars) {
  const auto D = load("theta3_chain.json");
  const auto conds = lambdaxi_conditions(D.presentation());
  for (std::size_t k = 0; k < 4; ++k) EXPECT_FALSE(conds[k].applicable);
  auto j = load_json(data_path("theta3_chain.json"));
  j.erase("a_off");
  {
    // g_1^2 g_3^2 = 1.
    const Deformation E(presentation_from_json(j), kDefaultDimensionCap, 4);
    const auto an = check_lambdaxi_conditions(E);
    EXPECT_TRUE(an.conditions.back().applicable);
    EXPECT_FALSE(an.conditions.back().holds);
    EXPECT_EQ(an.conditions.back().witness["J"], nlohmann::json::array({1, 3}));
    EXPECT_TRUE(an.to_report().ok());
  }
  {
    j["a"] = {1, 0, 0};
    const Deformation E(presentation_from_json(j), kDefaultDimensionCap, 4);
    const auto an = check_lambdaxi_conditions(E);
    EXPECT_TRUE(an.conditions.back().holds);
    EXPECT_TRUE(an.comparison.equal);
    EXPECT_TRUE(an.rho_identity);
    EXPECT_TRUE(an.to_report().ok());
  }
}

TEST(Commutation, QuantumPlane) {
  const auto D = load("c8.json");
  const auto res = check_commutation(D);
  ASSERT_EQ(res.factors, (std::vector<std::string>{"γ12", "γ1", "γ2"}));
  EXPECT_TRUE(res.matrix[1][2]);
  EXPECT_FALSE(res.matrix[0][1]);
  EXPECT_FALSE(res.matrix[0][2]);
  EXPECT_TRUE(res.report.ok());
  const auto* c = res.report.find("γ12∗γ1 = γ1∗γ12");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->witness["γ12∗γ1"]["cocycle"], true);
  EXPECT_EQ(c->witness["γ1∗γ12"]["cocycle"], false);
}

TEST(Commutation, OrderTwoFactorsCommute) {
  const auto D = load("theta3_full.json");
  const auto res = check_commutation(D);
  EXPECT_EQ(res.factors.size(), 6u);
  for (const auto& row : res.matrix)
    for (bool b : row) EXPECT_TRUE(b);
  EXPECT_TRUE(res.report.ok());
}

TEST(Commutation, DisjointFactorsCommute) {
  // gamma_12 and gamma_3 with r = 3.
  Group G({6, 6});
  std::vector<GroupElement> g{G.element({1, 0}), G.element({1, 3}), G.element({0, 1})};
  std::vector<Character> chi{G.character({2, 0}), G.character({4, 0}), G.character({0, 2})};
  const int N = 6;
  const auto s = [&](long v) { return CyclotomicScalar::rational(N, v); };
  LiftingPresentation p(G, g, chi, {s(0), s(0), s(2)}, {{0, 1, s(3)}});
  ASSERT_TRUE(validate(p).ok()) << failure_name(validate(p));
  const Deformation D(p, kDefaultDimensionCap, 8);
  const auto res = check_commutation(D);
  ASSERT_EQ(res.factors, (std::vector<std::string>{"γ12", "γ3"}));
  EXPECT_TRUE(res.matrix[0][1]);
  EXPECT_TRUE(res.report.ok());
}

}  // namespace
}  // namespace qlift
