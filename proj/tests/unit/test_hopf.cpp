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

#include "qlift/algebra.hpp"
#include "qlift/errors.hpp"
#include "qlift/io.hpp"
#include "support.hpp"

namespace qlift {
namespace {

using testing::data_path;

HopfAlgebra load(const char* name) { return HopfAlgebra(load_presentation(data_path(name))); }

const char* kSmall[] = {"c8.json", "theta3_chain.json", "theta3_full.json", "trivial.json", "example_a.json"};

AlgebraElement term(const HopfAlgebra& H, std::vector<int> powers, const GroupElement& g, const CyclotomicScalar& c) {
  const Basis& B = H.basis();
  return AlgebraElement(B.index(B.r_index(powers), B.g_index(g)), c);
}

TensorElement tensor(const Basis& B, std::size_t r1, std::size_t g1, std::size_t r2, std::size_t g2, const CyclotomicScalar& c) {
  return TensorElement({B.index(r1, g1), B.index(r2, g2)}, c);
}

AlgebraElement random_element(const HopfAlgebra& H, testing::ScalarGen& gen, int terms) {
  const Basis& B = H.basis();
  AlgebraElement u;
  for (int t = 0; t < terms; ++t)
    u.add(static_cast<BasisIndex>(gen.uniform(0, static_cast<int>(B.dimension()) - 1)), gen.nonzero(B.modulus()));
  return u;
}

TEST(Multiplication, LiftingRelations) {
  for (const char* f : kSmall) {
    const HopfAlgebra H = load(f);
    const auto& p = H.presentation();
    const auto& G = p.group();
    for (int i = 0; i < p.theta(); ++i) {
      // x_i^{r_i - 1} . x_i = a_i (1 - g_i^{r_i}).
      std::vector<int> pw(static_cast<std::size_t>(p.theta()), 0);
      pw[static_cast<std::size_t>(i)] = p.r(i) - 1;
      auto expected = term(H, std::vector<int>(pw.size(), 0), G.identity(), p.a(i));
      expected -= term(H, std::vector<int>(pw.size(), 0), G.power(p.g(i), p.r(i)), p.a(i));
      EXPECT_EQ(H.multiply(H.monomial(pw, G.identity()), H.x(i)), expected) << f << " i=" << i;
      // h x_i = chi_i(h) x_i h.
      for (std::size_t k = 0; k < G.size(); ++k) {
        const auto h = G.element_at(k);
        EXPECT_EQ(H.multiply(H.group_element(h), H.x(i)), p.chi_value(i, h) * H.multiply(H.x(i), H.group_element(h)));
      }
    }
    for (int i = 0; i < p.theta(); ++i)
      for (int j = i + 1; j < p.theta(); ++j) {
        // x_j x_i = chi_i(g_j) x_i x_j + a_ij (1 - g_i g_j).
        auto rhs = p.chi_value(i, p.g(j)) * H.multiply(H.x(i), H.x(j));
        rhs += p.a_off(i, j) * H.one();
        rhs -= p.a_off(i, j) * H.group_element(G.mul(p.g(i), p.g(j)));
        EXPECT_EQ(H.multiply(H.x(j), H.x(i)), rhs) << f;
        // and the derived reverse coefficient.
        auto rev = p.chi_value(j, p.g(i)) * H.multiply(H.x(j), H.x(i));
        rev += p.reverse_coefficient(i, j) * H.one();
        rev -= p.reverse_coefficient(i, j) * H.group_element(G.mul(p.g(i), p.g(j)));
        EXPECT_EQ(H.multiply(H.x(i), H.x(j)), rev) << f;
      }
  }
}

TEST(Multiplication, TrivialLiftingHasNoGroupTerms) {
  const HopfAlgebra A(load_presentation(data_path("c8.json")).trivial());
  for (int i = 0; i < 2; ++i) {
    AlgebraElement u = A.one();
    for (int n = 0; n < A.presentation().r(i); ++n) u = A.multiply(u, A.x(i));
    EXPECT_TRUE(u.empty());
  }
  EXPECT_EQ(A.multiply(A.x(1), A.x(0)), A.presentation().chi_value(0, A.presentation().g(1)) * A.multiply(A.x(0), A.x(1)));
}

TEST(Multiplication, UnitAndNormalForm) {
  const HopfAlgebra H = load("example_a.json");
  testing::ScalarGen gen(3);
  for (int t = 0; t < 20; ++t) {
    const auto u = random_element(H, gen, 4);
    EXPECT_EQ(H.multiply(H.one(), u), u);
    EXPECT_EQ(H.multiply(u, H.one()), u);
  }
  // The word x_2 x_1 x_1 agrees with iterated products.
  const auto& m = H.multiplication();
  const int word[] = {1, 0, 0};
  EXPECT_EQ(m.normal_form(word), H.multiply(H.multiply(H.x(1), H.x(0)), H.x(0)));
}

TEST(Multiplication, AssociativeOnAllBasisTriples) {
  for (const char* f : {"c8.json", "theta3_chain.json", "theta3_full.json"}) {
    const HopfAlgebra H = load(f);
    ASSERT_LE(H.basis().dimension(), 128u);
    const auto report = H.check_associativity(true, 4);
    EXPECT_TRUE(report.ok()) << f << " " << report.first_failure()->witness.dump();
  }
}

TEST(Multiplication, AssociativeSampledAboveCap) {
  const HopfAlgebra H = load("condition_iv.json");
  testing::ScalarGen gen(17);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_element(H, gen, 2), b = random_element(H, gen, 2), c = random_element(H, gen, 2);
    EXPECT_EQ(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c)));
  }
}

TEST(Multiplication, GroupBilinear) {
  const HopfAlgebra H = load("c8.json");
  const auto& G = H.presentation().group();
  testing::ScalarGen gen(21);
  for (int t = 0; t < 40; ++t) {
    const auto u = random_element(H, gen, 3), v = random_element(H, gen, 3);
    const auto h = H.group_element(G.element_at(static_cast<std::size_t>(gen.uniform(0, 7))));
    const auto k = H.group_element(G.element_at(static_cast<std::size_t>(gen.uniform(0, 7))));
    EXPECT_EQ(H.multiply(H.multiply(h, H.multiply(u, v)), k), H.multiply(H.multiply(h, u), H.multiply(v, k)));
  }
}

// Full-basis and R-triple associativity verdicts agree, also on a broken table.
class PerturbedTable final : public ProductTable {
 public:
  PerturbedTable(const Multiplication& m, std::size_t x, std::size_t y, const CyclotomicScalar& scale)
      : ProductTable(m.basis_ptr()) {
    const std::size_t n = basis().r_dimension();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = m.r_product(a, b);
    table_[x * n + y] *= scale;
  }
};

TEST(Multiplication, FullAndReducedAssociativityAgree) {
  std::vector<std::pair<std::string, HopfAlgebra>> cases;
  cases.emplace_back("plane r=2", HopfAlgebra(testing::quantum_plane(2, {1, 2, 3})));
  for (const char* f : {"theta3_chain.json", "theta3_full.json"}) cases.emplace_back(f, load(f));
  for (const auto& [f, H] : cases) {
    const Basis& B = H.basis();
    const auto& m = H.multiplication();
    EXPECT_EQ(check_associativity(m, true, 4, "m").ok(), check_associativity(m, false, 1, "m").ok());
    const PerturbedTable broken(m, B.letter(0), B.letter(1), B.one() + B.one());
    const bool full = check_associativity(broken, true, 4, "m").ok();
    const bool reduced = check_associativity(broken, false, 1, "m").ok();
    EXPECT_FALSE(full) << f;
    EXPECT_EQ(full, reduced) << f;
    const PerturbedTable same(m, B.letter(0), B.letter(1), B.one());
    EXPECT_TRUE(check_associativity(same, true, 4, "m").ok());
  }
}

TEST(Comultiplication, Generators) {
  const HopfAlgebra H = load("c8.json");
  const Basis& B = H.basis();
  const auto& p = H.presentation();
  for (int i = 0; i < 2; ++i) {
    TensorElement expected = tensor(B, B.letter(i), 0, 0, 0, B.one());
    expected += tensor(B, 0, B.generator(i), B.letter(i), 0, B.one());
    EXPECT_EQ(H.comultiply(H.x(i)), expected);
  }
  for (std::size_t g = 0; g < B.group_size(); ++g)
    EXPECT_EQ(H.comultiply(AlgebraElement(B.index(0, g), B.one())), tensor(B, 0, g, 0, g, B.one()));
  // r = 4, q = i: Delta(x^2) = x^2 (x) 1 + (1 + q) x g (x) x + g^2 (x) x^2.
  const auto q = p.q(0);
  EXPECT_EQ(q, root_of_unity(8, 2));
  const std::vector<int> two{2, 0};
  const std::size_t x2 = B.r_index(two);
  const std::size_t g = B.generator(0);
  TensorElement expected = tensor(B, x2, 0, 0, 0, B.one());
  expected += tensor(B, B.letter(0), g, B.letter(0), 0, B.one() + q);
  expected += tensor(B, 0, B.g_mul(g, g), x2, 0, B.one());
  EXPECT_EQ(H.comultiply(H.monomial(two, p.group().identity())), expected);
}

TEST(Comultiplication, PowersMatchClosedForm) {
  for (const char* f : kSmall) {
    const HopfAlgebra H = load(f);
    const auto& p = H.presentation();
    const auto& C = *H.coalgebra();
    for (int i = 0; i < p.theta(); ++i) {
      const auto dx = H.comultiply(H.x(i));
      TensorElement power = H.comultiply(H.one());
      AlgebraElement xn = H.one();
      for (int n = 1; n < p.r(i); ++n) {
        power = H.multiplication().multiply(power, dx);
        xn = H.multiply(xn, H.x(i));
        EXPECT_EQ(power, C.delta_power(i, n)) << f << " i=" << i << " n=" << n;
        EXPECT_EQ(H.comultiply(xn), power);
      }
    }
  }
}

TEST(Comultiplication, DoubleCoproductOfGenerator) {
  const HopfAlgebra H = load("example_a.json");
  const Basis& B = H.basis();
  for (std::size_t g = 0; g < B.group_size(); ++g) {
    const auto gb = B.index(0, g);
    EXPECT_EQ(H.comultiply_twice(AlgebraElement(gb, B.one())), TripleTensorElement({gb, gb, gb}, B.one()));
  }
  for (int i = 0; i < 2; ++i) {
    const auto x = B.index(B.letter(i), 0), one = B.index(0, 0), gi = B.index(0, B.generator(i));
    TripleTensorElement expected({x, one, one}, B.one());
    expected.add({gi, x, one}, B.one());
    expected.add({gi, gi, x}, B.one());
    EXPECT_EQ(H.comultiply_twice(H.x(i)), expected);
    EXPECT_EQ(H.coalgebra()->comultiply_twice_right(H.x(i)), expected);
  }
}

TEST(Comultiplication, DoubleCoproductOfPowersMatchesDoubleSum) {
  for (const char* f : {"c8.json", "example_a.json", "condition_iv.json"}) {
    const HopfAlgebra H = load(f);
    const Basis& B = H.basis();
    const auto& p = H.presentation();
    for (int i = 0; i < p.theta(); ++i) {
      const auto q = p.q(i);
      const std::size_t g = B.generator(i);
      auto gpow = [&](int k) {
        std::size_t out = 0;
        for (int t = 0; t < k; ++t) out = B.g_mul(out, g);
        return out;
      };
      auto xpow = [&](int k) {
        std::vector<int> pw(static_cast<std::size_t>(p.theta()), 0);
        pw[static_cast<std::size_t>(i)] = k;
        return B.r_index(pw);
      };
      for (int N = 0; N < std::min(p.r(i), 5); ++N) {
        TripleTensorElement oracle;
        for (int n = 0; n <= N; ++n)
          for (int m = 0; n + m <= N; ++m)
            oracle.add({B.index(xpow(n), gpow(N - n)), B.index(xpow(m), gpow(N - n - m)), B.index(xpow(N - n - m), 0)},
                       q_binomial(N, n, q) * q_binomial(N - n, m, q));
        const auto u = AlgebraElement(B.index(xpow(N), 0), B.one());
        EXPECT_EQ(H.comultiply_twice(u), oracle) << f << " i=" << i << " N=" << N;
        EXPECT_EQ(H.coalgebra()->comultiply_twice_right(u), oracle);
      }
    }
  }
}

TEST(Comultiplication, CounitLaws) {
  for (const char* f : kSmall) {
    const HopfAlgebra H = load(f);
    const Basis& B = H.basis();
    testing::ScalarGen gen(8);
    for (int t = 0; t < 15; ++t) {
      const auto u = random_element(H, gen, 3);
      AlgebraElement left, right;
      for (const auto& [k, c] : H.comultiply(u)) {
        left.add_scaled(AlgebraElement(k.second, B.one()), c * H.counit(AlgebraElement(k.first, B.one())));
        right.add_scaled(AlgebraElement(k.first, B.one()), c * H.counit(AlgebraElement(k.second, B.one())));
      }
      EXPECT_EQ(left, u) << f;
      EXPECT_EQ(right, u) << f;
    }
    for (int i = 0; i < H.presentation().theta(); ++i) EXPECT_TRUE(H.counit(H.x(i)).is_zero());
    EXPECT_TRUE(H.counit(AlgebraElement(B.index(0, B.group_size() - 1), B.one())).is_one());
  }
}

TEST(Bialgebra, AxiomsOnLiftings) {
  for (const char* f : {"c8.json", "example_a.json", "theta3_chain.json", "theta3_full.json", "trivial.json",
                        "condition_ii.json", "condition_iii.json", "condition_iv.json"}) {
    const HopfAlgebra H = load(f);
    ASSERT_LE(H.basis().dimension(), 512u);
    const auto report = H.check_bialgebra(H.basis().dimension() <= 128, 4);
    EXPECT_TRUE(report.ok()) << f << " " << report.first_failure()->check;
    EXPECT_NE(report.find("Delta and counit are multiplicative"), nullptr);
    EXPECT_NE(report.find("counit laws"), nullptr);
    EXPECT_TRUE(H.coalgebra()->check_coassociativity().ok());
  }
}

TEST(Bialgebra, DetectsBrokenProduct) {
  const HopfAlgebra H = load("c8.json");
  const Basis& B = H.basis();
  const PerturbedTable broken(H.multiplication(), B.letter(1), B.letter(0), B.one() + B.one());
  EXPECT_FALSE(check_bialgebra(*H.coalgebra(), broken, false, 2).ok());
}

TEST(Relations, DegreeProductCommutesWithGeneratorIffQSquaredIsOne) {
  for (const char* f : kSmall) {
    const HopfAlgebra H = load(f);
    const auto& p = H.presentation();
    const auto& G = p.group();
    for (const auto& e : p.nonzero_off_diagonal()) {
      const auto gg = H.group_element(G.mul(p.g(e.i), p.g(e.j)));
      for (int k : {e.i, e.j}) {
        const auto q = p.q(k);
        const auto commutator = H.multiply(gg, H.x(k)) - H.multiply(H.x(k), gg);
        EXPECT_EQ(commutator.empty(), q.pow(2).is_one()) << f << " k=" << k;
      }
    }
  }
}

TEST(Projection, PiAndLambda) {
  const HopfAlgebra H = load("example_a.json");
  const Basis& B = H.basis();
  const auto& G = H.presentation().group();
  const auto g = G.element({1, 0}), h = G.element({0, 1});
  const auto three = B.one() + B.one() + B.one();
  EXPECT_TRUE(project_pi(B, term(H, {1, 1}, g, B.one())).empty());
  for (int i = 1; i < 3; ++i) EXPECT_TRUE(project_pi(B, H.monomial(std::vector<int>{i, i}, G.identity())).empty());
  auto u = term(H, {0, 0}, g, three);
  u += term(H, {1, 0}, h, B.one());
  EXPECT_EQ(project_pi(B, u), term(H, {0, 0}, g, three));

  testing::ScalarGen gen(4);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_element(H, gen, 5);
    const auto pv = project_pi(B, v);
    EXPECT_EQ(project_pi(B, pv), pv);
    const auto k = H.group_element(G.element_at(static_cast<std::size_t>(gen.uniform(0, 17))));
    const auto l = H.group_element(G.element_at(static_cast<std::size_t>(gen.uniform(0, 17))));
    EXPECT_EQ(project_pi(B, H.multiply(H.multiply(k, v), l)), H.multiply(H.multiply(k, pv), l));
  }

  EXPECT_TRUE(integral_lambda(B, H.one()).is_one());
  // lambda(1 - g^r - g^{-r} h^r + 1) = 2.
  auto w = H.one() + H.one();
  w -= H.group_element(G.power(g, 3));
  w -= H.group_element(G.mul(G.power(g, -3), G.power(h, 3)));
  EXPECT_EQ(integral_lambda(B, w), B.one() + B.one());
  EXPECT_THROW(integral_lambda(B, H.x(0)), PreconditionError);
}

TEST(Projection, LambdaOnC8Expression) {
  const HopfAlgebra H = load("c8.json");
  const Basis& B = H.basis();
  const auto& G = H.presentation().group();
  const auto q = root_of_unity(8, 2);
  const auto four = CyclotomicScalar::rational(8, 4);
  // lambda(4 c^6 - 4 c^2 + 4 q (1 - c^4)) = 4 q.
  AlgebraElement u = four * H.group_element(G.element({6}));
  u -= four * H.group_element(G.element({2}));
  u += (four * q) * (H.one() - H.group_element(G.element({4})));
  EXPECT_EQ(integral_lambda(B, u), four * q);
}

TEST(Projection, Coaction) {
  const HopfAlgebra H = load("example_a.json");
  const Basis& B = H.basis();
  const auto& p = H.presentation();
  const auto& G = p.group();
  const auto e = coaction_rho(B, 0, 0);
  EXPECT_TRUE(G.is_identity(e.degree));
  const std::size_t x1x2 = B.r_index(std::vector<int>{1, 1});
  const std::size_t top = B.r_index(std::vector<int>{2, 2});
  const auto rho = coaction_rho(B, x1x2, top);
  EXPECT_EQ(rho.degree, G.power(G.mul(p.g(0), p.g(1)), 3));
  EXPECT_EQ(rho.left, x1x2);
  EXPECT_EQ(rho.right, top);
  for (int j = 1; j < 3; ++j) {
    const auto c = coaction_rho(B, B.r_index(std::vector<int>{0, j}), B.r_index(std::vector<int>{0, 3 - j}));
    EXPECT_EQ(c.degree, G.power(p.g(1), 3));
  }
  EXPECT_THROW(coaction_rho(B, B.r_dimension(), 0), StructuralError);
}

TEST(Basis, IndexingRoundTrip) {
  const HopfAlgebra H = load("example_a.json");
  const Basis& B = H.basis();
  EXPECT_EQ(B.dimension(), 162u);
  for (BasisIndex b = 0; b < B.dimension(); ++b) {
    const auto m = B.monomial(b);
    EXPECT_EQ(B.index(m), b);
  }
  EXPECT_THROW(B.r_index(std::vector<int>{3, 0}), StructuralError);
  EXPECT_THROW(Basis(H.presentation(), 100), DimensionCapExceeded);
  EXPECT_EQ(B.render(B.index(B.r_index(std::vector<int>{1, 2}), 0)), "x1 x2^2");
}

}  // namespace
}  // namespace qlift
