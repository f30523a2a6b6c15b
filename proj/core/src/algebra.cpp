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

#include "qlift/algebra.hpp"

#include <sstream>

#include "qlift/errors.hpp"
#include "qlift/parallel.hpp"

namespace qlift {
namespace {

void add_shifted(const Basis& basis, AlgebraElement& out, const AlgebraElement& src, const CyclotomicScalar& coef,
                 std::size_t h) {
  for (const auto& [b, v] : src) out.add_product(basis.index(basis.r_part(b), basis.g_mul(basis.g_part(b), h)), v, coef);
}

std::vector<int> letters_of(const Basis& basis, std::size_t r) {
  std::vector<int> word;
  const auto& pw = basis.powers(r);
  for (int i = 0; i < basis.theta(); ++i) word.insert(word.end(), static_cast<std::size_t>(pw[static_cast<std::size_t>(i)]), i);
  return word;
}

nlohmann::json pair_witness(const Basis& basis, BasisIndex a, BasisIndex b) {
  return {{"left", basis.render(a)}, {"right", basis.render(b)}};
}

}  // namespace

// ---------------------------------------------------------------- Basis

Basis::Basis(const LiftingPresentation& p, std::size_t cap)
    : group_(p.group()), modulus_(p.modulus()), ng_(p.group().size()), zero_(CyclotomicScalar::zero(p.modulus())) {
  const int theta = p.theta();
  for (int i = 0; i < theta; ++i) {
    if (p.r(i) < 2) throw PreconditionError("generator " + std::to_string(i + 1) + " has chi_i(g_i) = 1");
    r_.push_back(p.r(i));
    nr_ *= static_cast<std::size_t>(p.r(i));
    if (nr_ * ng_ > cap)
      throw DimensionCapExceeded("dim A exceeds the cap of " + std::to_string(cap) + " (|Gamma| = " + std::to_string(ng_) +
                                 ", prod r_i >= " + std::to_string(nr_) + ")");
  }

  powers_.resize(nr_);
  degree_.resize(nr_);
  for (std::size_t r = 0; r < nr_; ++r) {
    std::vector<int> pw(static_cast<std::size_t>(theta));
    std::size_t rest = r;
    for (int i = theta; i-- > 0;) {
      pw[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(r_[static_cast<std::size_t>(i)]));
      rest /= static_cast<std::size_t>(r_[static_cast<std::size_t>(i)]);
    }
    int d = 0;
    for (int n : pw) d += n;
    degree_[r] = d;
    powers_[r] = std::move(pw);
  }
  for (int i = 0; i < theta; ++i) {
    std::vector<int> pw(static_cast<std::size_t>(theta), 0);
    pw[static_cast<std::size_t>(i)] = 1;
    letter_.push_back(r_index(pw));
  }

  elements_.reserve(ng_);
  for (std::size_t g = 0; g < ng_; ++g) elements_.push_back(group_.element_at(g));
  mul_.resize(ng_ * ng_);
  inv_.resize(ng_);
  for (std::size_t a = 0; a < ng_; ++a) {
    for (std::size_t b = 0; b < ng_; ++b) mul_[a * ng_ + b] = group_.index(group_.mul(elements_[a], elements_[b]));
    inv_[a] = group_.index(group_.inverse(elements_[a]));
  }
  for (int i = 0; i < theta; ++i) {
    generators_.push_back(p.g(i));
    gen_.push_back(group_.index(p.g(i)));
  }

  gdeg_.resize(nr_);
  chars_.resize(nr_);
  chi_exp_.resize(nr_ * ng_);
  for (std::size_t r = 0; r < nr_; ++r) {
    GroupElement d = group_.identity();
    Character c = group_.trivial_character();
    for (int i = 0; i < theta; ++i) {
      const int n = powers_[r][static_cast<std::size_t>(i)];
      d = group_.mul(d, group_.power(p.g(i), n));
      c = group_.char_mul(c, group_.char_pow(p.chi(i), n));
    }
    gdeg_[r] = group_.index(d);
    for (std::size_t g = 0; g < ng_; ++g) chi_exp_[r * ng_ + g] = group_.pairing(c, elements_[g]);
    chars_[r] = std::move(c);
  }

  const int e = group_.exponent();
  roots_.reserve(static_cast<std::size_t>(e));
  for (int k = 0; k < e; ++k) roots_.push_back(root_of_unity(modulus_, static_cast<long>(k) * (modulus_ / e)));
}

std::size_t Basis::r_index(std::span<const int> powers) const {
  if (powers.size() != r_.size())
    throw StructuralError("monomial has " + std::to_string(powers.size()) + " exponents, expected theta = " + std::to_string(r_.size()));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (powers[i] < 0 || powers[i] >= r_[i])
      throw StructuralError("power of x" + std::to_string(i + 1) + " must lie in [0, " + std::to_string(r_[i]) + "), got " +
                            std::to_string(powers[i]));
    idx = idx * static_cast<std::size_t>(r_[i]) + static_cast<std::size_t>(powers[i]);
  }
  return idx;
}

BasisMonomial Basis::monomial(BasisIndex b) const { return {powers(r_part(b)), g_element(g_part(b))}; }

BasisIndex Basis::index(const BasisMonomial& m) const { return index(r_index(m.powers), g_index(m.grp)); }

const CyclotomicScalar& Basis::root(long k) const {
  const long e = group_.exponent();
  long kk = k % e;
  if (kk < 0) kk += e;
  return roots_[static_cast<std::size_t>(kk)];
}

bool Basis::balanced(std::size_t x, std::size_t y) const {
  const auto& cx = chars_[x].exponents;
  const auto& cy = chars_[y].exponents;
  const auto orders = group_.orders();
  for (std::size_t j = 0; j < orders.size(); ++j)
    if ((cx[j] + cy[j]) % orders[j] != 0) return false;
  return true;
}

std::string Basis::render_r(std::size_t r) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    const int n = powers_[r][i];
    if (n == 0) continue;
    if (any) os << ' ';
    os << 'x' << (i + 1);
    if (n != 1) os << '^' << n;
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::string Basis::render(BasisIndex b) const {
  const std::size_t g = g_part(b);
  if (g == 0) return render_r(r_part(b));
  return render_r(r_part(b)) + " * " + group_.render(elements_[g]);
}

std::string Basis::render(const AlgebraElement& u) const {
  if (u.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : u) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ") " << render(b);
  }
  return os.str();
}

bool Basis::same_shape(const Basis& other) const {
  return group_ == other.group_ && modulus_ == other.modulus_ && r_ == other.r_ && generators_ == other.generators_ &&
         chars_ == other.chars_;
}

bool Basis::matches(const LiftingPresentation& p) const {
  if (!(group_ == p.group()) || modulus_ != p.modulus() || p.theta() != theta()) return false;
  for (int i = 0; i < theta(); ++i)
    if (!(generators_[static_cast<std::size_t>(i)] == p.g(i)) || !(chars_[letter(i)] == p.chi(i))) return false;
  return true;
}

// ---------------------------------------------------------- ProductTable

ProductTable::ProductTable(std::shared_ptr<const Basis> basis) : basis_(std::move(basis)) {
  table_.resize(basis_->r_dimension() * basis_->r_dimension());
}

void ProductTable::accumulate(AlgebraElement& out, BasisIndex a, BasisIndex b, const CyclotomicScalar& coef) const {
  const Basis& B = *basis_;
  const std::size_t g = B.g_part(a);
  const std::size_t y = B.r_part(b);
  const std::size_t gh = B.g_mul(g, B.g_part(b));
  const CyclotomicScalar factor = coef * B.chi_value(y, g);
  for (const auto& [t, v] : r_product(B.r_part(a), y)) out.add_product(B.index(B.r_part(t), B.g_mul(B.g_part(t), gh)), v, factor);
}

AlgebraElement ProductTable::multiply_basis(BasisIndex a, BasisIndex b) const {
  AlgebraElement out;
  accumulate(out, a, b, basis_->one());
  return out;
}

AlgebraElement ProductTable::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  AlgebraElement out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) accumulate(out, a, b, ca * cb);
  return out;
}

TensorElement ProductTable::multiply(const TensorElement& u, const TensorElement& v) const {
  TensorElement out;
  for (const auto& [ka, ca] : u) {
    for (const auto& [kb, cb] : v) {
      const auto left = multiply_basis(ka.first, kb.first);
      if (left.empty()) continue;
      const auto right = multiply_basis(ka.second, kb.second);
      const auto c = ca * cb;
      for (const auto& [l, cl] : left) {
        const auto clc = cl * c;
        for (const auto& [r, cr] : right) out.add_product({l, r}, clc, cr);
      }
    }
  }
  return out;
}

// -------------------------------------------------------- Multiplication

Multiplication::Multiplication(std::shared_ptr<const Basis> basis, const LiftingPresentation& p)
    : ProductTable(std::move(basis)) {
  if (!basis_->matches(p)) throw PreconditionError("multiplication: basis and presentation disagree");
  const int theta = p.theta();
  for (int i = 0; i < theta; ++i) a_.push_back(p.a(i));
  s_.assign(static_cast<std::size_t>(theta), std::vector<CyclotomicScalar>(static_cast<std::size_t>(theta), p.zero()));
  for (const auto& e : p.off_diagonal()) s_[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.value;

  const std::size_t nr = basis_->r_dimension();
  for (std::size_t x = 0; x < nr; ++x) {
    const auto wx = letters_of(*basis_, x);
    for (std::size_t y = 0; y < nr; ++y) {
      auto w = wx;
      const auto wy = letters_of(*basis_, y);
      w.insert(w.end(), wy.begin(), wy.end());
      table_[x * nr + y] = reduce(w);
    }
  }
}

AlgebraElement Multiplication::normal_form(std::span<const int> word) const {
  for (int l : word)
    if (l < 0 || l >= basis_->theta()) throw StructuralError("letter index out of range");
  return reduce(std::vector<int>(word.begin(), word.end()));
}

// Rewriting, applied to the first matching position:
//   1. a run x_i^{r_i} becomes a_i (1 - g_i^{r_i});
//   2. otherwise the leftmost inversion x_b x_a (b > a) becomes
//      chi_a(g_b) x_a x_b + s_ab (1 - g_a g_b);
// group elements spawned in the middle are pushed right with h x_i = chi_i(h) x_i h.
// Termination: rule 1 and the spawned terms of rule 2 strictly lower the
// x-degree; the main term of rule 2 keeps the degree and lowers the number of
// inversions by one. So (degree, inversions) decreases lexicographically.
const AlgebraElement& Multiplication::reduce(const std::vector<int>& word) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(word); it != memo_.end()) return it->second;
  }
  const Basis& B = *basis_;
  auto chi_word = [&](std::size_t from, std::size_t h) {
    long k = 0;
    for (std::size_t t = from; t < word.size(); ++t) k += B.letter_exponent(word[t], h);
    return k;
  };

  AlgebraElement result;
  bool rewritten = false;
  for (std::size_t s = 0; s < word.size() && !rewritten;) {
    std::size_t e = s;
    while (e < word.size() && word[e] == word[s]) ++e;
    const int i = word[s];
    const auto ri = static_cast<std::size_t>(B.r(i));
    if (e - s >= ri) {
      rewritten = true;
      const auto& ai = a_[static_cast<std::size_t>(i)];
      if (!ai.is_zero()) {
        std::vector<int> rest(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(s));
        rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(s + ri), word.end());
        const AlgebraElement& nf = reduce(rest);
        std::size_t gr = 0;
        for (std::size_t t = 0; t < ri; ++t) gr = B.g_mul(gr, B.generator(i));
        result.add_scaled(nf, ai);
        add_shifted(B, result, nf, -(ai * B.root(chi_word(s + ri, gr))), gr);
      }
    }
    s = e;
  }
  if (!rewritten) {
    for (std::size_t t = 0; t + 1 < word.size(); ++t) {
      const int b = word[t];
      const int a = word[t + 1];
      if (b <= a) continue;
      rewritten = true;
      auto swapped = word;
      std::swap(swapped[t], swapped[t + 1]);
      result.add_scaled(reduce(swapped), B.root(B.letter_exponent(a, B.generator(b))));
      const auto& sab = s_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (!sab.is_zero()) {
        std::vector<int> rest(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(t));
        rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(t + 2), word.end());
        const AlgebraElement& nf = reduce(rest);
        const std::size_t gg = B.g_mul(B.generator(a), B.generator(b));
        result.add_scaled(nf, sab);
        add_shifted(B, result, nf, -(sab * B.root(chi_word(t + 2, gg))), gg);
      }
      break;
    }
  }
  if (!rewritten) {
    std::vector<int> pw(static_cast<std::size_t>(B.theta()), 0);
    for (int l : word) ++pw[static_cast<std::size_t>(l)];
    result.add(B.index(B.r_index(pw), 0), B.one());
  }

  std::lock_guard lock(memo_mutex_);
  return memo_.emplace(word, std::move(result)).first->second;
}

// ------------------------------------------------------------- Coalgebra

Coalgebra::Coalgebra(std::shared_ptr<const Basis> basis, const ProductTable& product) : basis_(std::move(basis)) {
  const Basis& B = *basis_;
  const std::size_t nr = B.r_dimension();
  delta_.resize(nr);
  delta2_.resize(nr);
  delta2_right_.resize(nr);

  for (std::size_t r = 0; r < nr; ++r) {
    TensorElement d({B.index(0, 0), B.index(0, 0)}, B.one());
    for (int i = 0; i < B.theta(); ++i) {
      const int n = B.powers(r)[static_cast<std::size_t>(i)];
      if (n > 0) d = product.multiply(d, delta_power(i, n));
    }
    for (const auto& [k, c] : d) {
      if (B.g_part(k.second) != 0) throw CertificationError("coproduct: right tensor factor carries a group element");
      delta_[r].push_back({c, B.r_part(k.first), B.g_part(k.first), B.r_part(k.second)});
    }
  }

  for (std::size_t r = 0; r < nr; ++r) {
    TripleTensorElement left;
    TripleTensorElement right;
    for (const auto& t : delta_[r]) {
      for (const auto& u : delta_[t.r1]) {
        left.add_product({B.index(u.r1, B.g_mul(u.g1, t.g1)), B.index(u.r2, t.g1), B.index(t.r2, 0)}, t.coef, u.coef);
      }
      for (const auto& u : delta_[t.r2]) {
        right.add_product({B.index(t.r1, t.g1), B.index(u.r1, u.g1), B.index(u.r2, 0)}, t.coef, u.coef);
      }
    }
    for (const auto& [k, c] : left)
      delta2_[r].push_back({c, B.r_part(k[0]), B.g_part(k[0]), B.r_part(k[1]), B.g_part(k[1]), B.r_part(k[2])});
    for (const auto& [k, c] : right)
      delta2_right_[r].push_back({c, B.r_part(k[0]), B.g_part(k[0]), B.r_part(k[1]), B.g_part(k[1]), B.r_part(k[2])});
  }
}

TensorElement Coalgebra::delta_power(int i, int n) const {
  const Basis& B = *basis_;
  if (i < 0 || i >= B.theta()) throw StructuralError("generator index out of range");
  if (n < 0 || n >= B.r(i)) throw StructuralError("power out of range");
  const std::size_t xi = B.letter(i);
  const auto q = B.chi_value(xi, B.generator(i));
  std::vector<int> pw(static_cast<std::size_t>(B.theta()), 0);
  auto mono = [&](int k) {
    pw[static_cast<std::size_t>(i)] = k;
    return B.r_index(pw);
  };
  TensorElement out;
  std::size_t g = 0;
  std::vector<std::size_t> gpow(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    gpow[static_cast<std::size_t>(k)] = g;
    g = B.g_mul(g, B.generator(i));
  }
  for (int k = 0; k <= n; ++k)
    out.add({B.index(mono(k), gpow[static_cast<std::size_t>(n - k)]), B.index(mono(n - k), 0)}, q_binomial(n, k, q));
  return out;
}

TensorElement Coalgebra::comultiply(const AlgebraElement& u) const {
  const Basis& B = *basis_;
  TensorElement out;
  for (const auto& [b, c] : u) {
    const std::size_t g = B.g_part(b);
    for (const auto& t : delta_[B.r_part(b)])
      out.add_product({B.index(t.r1, B.g_mul(t.g1, g)), B.index(t.r2, g)}, c, t.coef);
  }
  return out;
}

namespace {

TripleTensorElement expand_twice(const Basis& B, const AlgebraElement& u,
                                 const std::vector<std::vector<DoubleCoproductTerm>>& table) {
  TripleTensorElement out;
  for (const auto& [b, c] : u) {
    const std::size_t g = B.g_part(b);
    for (const auto& t : table[B.r_part(b)])
      out.add_product({B.index(t.r1, B.g_mul(t.g1, g)), B.index(t.r2, B.g_mul(t.g2, g)), B.index(t.r3, g)}, c, t.coef);
  }
  return out;
}

}  // namespace

TripleTensorElement Coalgebra::comultiply_twice(const AlgebraElement& u) const { return expand_twice(*basis_, u, delta2_); }

TripleTensorElement Coalgebra::comultiply_twice_right(const AlgebraElement& u) const {
  return expand_twice(*basis_, u, delta2_right_);
}

CyclotomicScalar Coalgebra::counit(const AlgebraElement& u) const {
  CyclotomicScalar s = basis_->zero();
  for (const auto& [b, c] : u)
    if (basis_->r_part(b) == 0) s += c;
  return s;
}

Report Coalgebra::check_coassociativity() const {
  const Basis& B = *basis_;
  Report report;
  for (std::size_t r = 0; r < B.r_dimension(); ++r) {
    AlgebraElement x(B.index(r, 0), B.one());
    if (!(comultiply_twice(x) == comultiply_twice_right(x))) {
      report.add("coassociativity", false, {{"monomial", B.render_r(r)}});
      return report;
    }
  }
  report.add("coassociativity", true, {{"checked", B.r_dimension()}});
  return report;
}

// ----------------------------------------------------------- HopfAlgebra

namespace {

void require_valid(const LiftingPresentation& p) {
  const Report v = validate(p);
  if (const auto* f = v.first_failure())
    throw PreconditionError("invalid presentation: " + f->check + " " + f->witness.dump());
}

}  // namespace

HopfAlgebra::HopfAlgebra(LiftingPresentation p, std::size_t cap) : presentation_(std::move(p)) {
  require_valid(presentation_);
  auto basis = std::make_shared<const Basis>(presentation_, cap);
  auto radford = std::make_shared<const Multiplication>(basis, presentation_.trivial());
  coalgebra_ = std::make_shared<const Coalgebra>(basis, *radford);
  multiplication_ = presentation_.all_scalars_zero() ? radford : std::make_shared<const Multiplication>(basis, presentation_);
}

HopfAlgebra::HopfAlgebra(LiftingPresentation p, std::shared_ptr<const Coalgebra> coalgebra)
    : presentation_(std::move(p)), coalgebra_(std::move(coalgebra)) {
  require_valid(presentation_);
  if (!coalgebra_->basis().matches(presentation_)) throw PreconditionError("coalgebra was built for different group data");
  multiplication_ = std::make_shared<const Multiplication>(coalgebra_->basis_ptr(), presentation_);
}

HopfAlgebra HopfAlgebra::radford(const LiftingPresentation& p, std::size_t cap) { return HopfAlgebra(p.trivial(), cap); }

AlgebraElement HopfAlgebra::one() const { return AlgebraElement(basis().index(0, 0), basis().one()); }

AlgebraElement HopfAlgebra::x(int i) const { return AlgebraElement(basis().index(basis().letter(i), 0), basis().one()); }

AlgebraElement HopfAlgebra::group_element(const GroupElement& g) const {
  return AlgebraElement(basis().index(0, basis().g_index(g)), basis().one());
}

AlgebraElement HopfAlgebra::monomial(std::span<const int> powers, const GroupElement& g) const {
  return AlgebraElement(basis().index(basis().r_index(powers), basis().g_index(g)), basis().one());
}

AlgebraElement HopfAlgebra::basis_element(BasisIndex b) const {
  if (b >= basis().dimension()) throw StructuralError("basis index out of range");
  return AlgebraElement(b, basis().one());
}

AlgebraElement HopfAlgebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  return multiplication_->multiply(u, v);
}

Report check_bialgebra(const Coalgebra& C, const ProductTable& m, bool full_basis, int jobs) {
  const Basis& B = C.basis();
  auto basis_element = [&](BasisIndex b) { return AlgebraElement(b, B.one()); };
  Report report = C.check_coassociativity();

  {
    bool ok = true;
    nlohmann::json witness{{"checked", B.dimension()}};
    for (BasisIndex b = 0; b < B.dimension() && ok; ++b) {
      const auto d = C.comultiply(basis_element(b));
      AlgebraElement left, right;
      for (const auto& [k, c] : d) {
        if (B.r_part(k.first) == 0) left.add(k.second, c);
        if (B.r_part(k.second) == 0) right.add(k.first, c);
      }
      if (!(left == basis_element(b)) || !(right == basis_element(b))) {
        ok = false;
        witness = {{"element", B.render(b)}};
      }
    }
    report.add("counit laws", ok, witness);
  }

  std::vector<BasisIndex> domain;
  if (full_basis) {
    for (BasisIndex b = 0; b < B.dimension(); ++b) domain.push_back(b);
  } else {
    for (std::size_t r = 0; r < B.r_dimension(); ++r) domain.push_back(B.index(r, 0));
  }
  const std::size_t n = domain.size();
  const std::size_t bad = parallel_find_first(n * n, jobs, [&](std::size_t k) {
    const BasisIndex a = domain[k / n];
    const BasisIndex b = domain[k % n];
    const auto prod = m.multiply_basis(a, b);
    const auto lhs = C.comultiply(prod);
    const auto rhs = m.multiply(C.comultiply(basis_element(a)), C.comultiply(basis_element(b)));
    return !(lhs == rhs) || !(C.counit(prod) == C.counit(basis_element(a)) * C.counit(basis_element(b)));
  });
  if (bad < n * n)
    report.add("Delta and counit are multiplicative", false, pair_witness(B, domain[bad / n], domain[bad % n]));
  else
    report.add("Delta and counit are multiplicative", true, {{"pairs", n * n}, {"full_basis", full_basis}});
  return report;
}

Report HopfAlgebra::check_bialgebra(bool full_basis, int jobs) const {
  return qlift::check_bialgebra(*coalgebra_, *multiplication_, full_basis, jobs);
}

Report HopfAlgebra::check_associativity(bool full_basis, int jobs) const {
  return qlift::check_associativity(*multiplication_, full_basis, jobs, "associativity");
}

Report check_associativity(const ProductTable& m, bool full_basis, int jobs, const std::string& name) {
  const Basis& B = m.basis();
  Report report;
  const std::size_t nr = B.r_dimension();

  {
    bool ok = true;
    nlohmann::json witness{{"pairs", nr * nr}};
    for (std::size_t x = 0; x < nr && ok; ++x) {
      for (std::size_t y = 0; y < nr && ok; ++y) {
        for (const auto& [b, c] : m.r_product(x, y)) {
          Character expected = B.group().char_mul(B.character(x), B.character(y));
          if (!(B.character(B.r_part(b)) == expected)) {
            ok = false;
            witness = {{"left", B.render_r(x)}, {"right", B.render_r(y)}, {"term", B.render(b)}};
            break;
          }
        }
      }
    }
    report.add(name + ": products are character-homogeneous", ok, witness);
  }
  {
    bool ok = true;
    nlohmann::json witness{{"checked", nr}};
    const BasisIndex unit = B.index(0, 0);
    for (std::size_t x = 0; x < nr && ok; ++x) {
      AlgebraElement e(B.index(x, 0), B.one());
      if (!(m.multiply_basis(unit, B.index(x, 0)) == e) || !(m.multiply_basis(B.index(x, 0), unit) == e)) {
        ok = false;
        witness = {{"monomial", B.render_r(x)}};
      }
    }
    report.add(name + ": unit", ok, witness);
  }

  std::vector<BasisIndex> domain;
  if (full_basis) {
    for (BasisIndex b = 0; b < B.dimension(); ++b) domain.push_back(b);
  } else {
    for (std::size_t r = 0; r < nr; ++r) domain.push_back(B.index(r, 0));
  }
  const std::size_t n = domain.size();
  std::vector<AlgebraElement> pairs(n * n);
  parallel_for(n * n, jobs, [&](std::size_t k) { pairs[k] = m.multiply_basis(domain[k / n], domain[k % n]); });
  const std::size_t bad = parallel_find_first(n * n * n, jobs, [&](std::size_t k) {
    const std::size_t i = k / (n * n), j = (k / n) % n, l = k % n;
    AlgebraElement lhs, rhs;
    for (const auto& [t, v] : pairs[i * n + j]) m.accumulate(lhs, t, domain[l], v);
    for (const auto& [t, v] : pairs[j * n + l]) m.accumulate(rhs, domain[i], t, v);
    return !(lhs == rhs);
  });
  if (bad < n * n * n) {
    report.add(name, false,
               {{"x", B.render(domain[bad / (n * n)])}, {"y", B.render(domain[(bad / n) % n])}, {"z", B.render(domain[bad % n])}});
  } else {
    report.add(name, true, {{"triples", n * n * n}, {"full_basis", full_basis}});
  }
  return report;
}

// --------------------------------------------------- pi, lambda, rho

AlgebraElement project_pi(const Basis& basis, const AlgebraElement& u) {
  AlgebraElement out;
  for (const auto& [b, c] : u)
    if (basis.r_part(b) == 0) out.add(b, c);
  return out;
}

CyclotomicScalar integral_lambda(const Basis& basis, const AlgebraElement& u) {
  CyclotomicScalar s = basis.zero();
  for (const auto& [b, c] : u) {
    if (basis.r_part(b) != 0) throw PreconditionError("integral_lambda: element has an x-letter term " + basis.render(b));
    if (basis.g_part(b) == 0) s += c;
  }
  return s;
}

Coaction coaction_rho(const Basis& basis, std::size_t left, std::size_t right) {
  if (left >= basis.r_dimension() || right >= basis.r_dimension()) throw StructuralError("R-monomial index out of range");
  return {basis.g_element(basis.g_mul(basis.group_degree(left), basis.group_degree(right))), left, right};
}

}  // namespace qlift
