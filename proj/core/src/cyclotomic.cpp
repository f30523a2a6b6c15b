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

#include "qlift/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qlift/errors.hpp"

namespace qlift {
namespace {

void trim(RationalPolynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact long division; returns quotient, leaves remainder in `num`.
RationalPolynomial divide(RationalPolynomial& num, const RationalPolynomial& den) {
  trim(num);
  if (den.empty()) throw DivisionByZero("polynomial division by zero");
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  RationalPolynomial quot(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    if (sgn(num[k]) == 0) continue;
    Rational c = num[k] / den.back();
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  trim(quot);
  return quot;
}

RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

struct FieldTables {
  int modulus = 1;
  int degree = 1;
  RationalPolynomial phi;  // monic, degree `degree`
};

class FieldRegistry {
 public:
  const FieldTables& get(int n) {
    std::lock_guard lock(mutex_);
    return get_locked(n);
  }

 private:
  const FieldTables& get_locked(int n) {
    if (auto it = tables_.find(n); it != tables_.end()) return *it->second;
    RationalPolynomial num(static_cast<std::size_t>(n) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const auto& sub = get_locked(d);
      RationalPolynomial rem = num;
      num = divide(rem, sub.phi);
      if (!rem.empty()) throw CertificationError("cyclotomic division left a remainder");
    }
    auto t = std::make_unique<FieldTables>();
    t->modulus = n;
    t->degree = static_cast<int>(num.size()) - 1;
    t->phi = std::move(num);
    const auto& ref = *t;
    tables_.emplace(n, std::move(t));
    return ref;
  }

  std::mutex mutex_;
  std::map<int, std::unique_ptr<FieldTables>> tables_;
};

FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

const FieldTables& tables(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be >= 1");
  return registry().get(n);
}

// Reduces `buf` (any length) modulo phi into a vector of length degree.
std::vector<Rational> reduce(std::vector<Rational>&& buf, const FieldTables& t) {
  const std::size_t d = static_cast<std::size_t>(t.degree);
  for (std::size_t k = buf.size(); k-- > d;) {
    if (sgn(buf[k]) == 0) continue;
    const Rational c = buf[k];
    for (std::size_t j = 0; j <= d; ++j) buf[k - d + j] -= c * t.phi[j];
  }
  buf.resize(d);
  return std::move(buf);
}

}  // namespace

RationalPolynomial cyclotomic_polynomial(int n) { return tables(n).phi; }

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CyclotomicScalar::CyclotomicScalar() : modulus_(1), coeffs_(1) {}

CyclotomicScalar CyclotomicScalar::zero(int modulus) {
  return CyclotomicScalar(modulus, std::vector<Rational>(static_cast<std::size_t>(tables(modulus).degree)));
}

CyclotomicScalar CyclotomicScalar::one(int modulus) { return rational(modulus, Rational(1)); }

CyclotomicScalar CyclotomicScalar::rational(int modulus, const Rational& value) {
  if (sgn(value.get_den()) == 0) throw DivisionByZero("zero denominator in rational");
  auto s = zero(modulus);
  s.coeffs_[0] = value;
  s.coeffs_[0].canonicalize();
  return s;
}

CyclotomicScalar CyclotomicScalar::from_polynomial(int modulus, std::span<const Rational> coeffs) {
  const auto& t = tables(modulus);
  std::vector<Rational> buf(coeffs.begin(), coeffs.end());
  for (auto& c : buf) {
    if (sgn(c.get_den()) == 0) throw DivisionByZero("zero denominator in coefficient");
    c.canonicalize();
  }
  if (buf.size() < static_cast<std::size_t>(t.degree)) buf.resize(static_cast<std::size_t>(t.degree));
  return CyclotomicScalar(modulus, reduce(std::move(buf), t));
}

CyclotomicScalar CyclotomicScalar::from_terms(int modulus, std::span<const Term> terms) {
  std::vector<Rational> buf(static_cast<std::size_t>(modulus));
  for (const auto& term : terms) {
    if (sgn(term.denominator) == 0) throw DivisionByZero("zero denominator in scalar term");
    long p = term.power % modulus;
    if (p < 0) p += modulus;
    Rational c(term.numerator, term.denominator);
    c.canonicalize();
    buf[static_cast<std::size_t>(p)] += c;
  }
  return from_polynomial(modulus, buf);
}

bool CyclotomicScalar::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CyclotomicScalar::is_one() const noexcept {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool CyclotomicScalar::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void CyclotomicScalar::require_same_field(const CyclotomicScalar& other) const {
  if (modulus_ != other.modulus_) {
    throw ModulusMismatch("scalars from Q(z_" + std::to_string(modulus_) + ") and Q(z_" +
                          std::to_string(other.modulus_) + ") cannot be combined");
  }
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(other.coeffs_[i]) != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& other) {
  require_same_field(other);
  const std::size_t d = coeffs_.size();
  if (d == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rational> buf(2 * d - 1);
  bool any = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      buf[i + j] += coeffs_[i] * other.coeffs_[j];
      any = true;
    }
  }
  if (!any) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  coeffs_ = reduce(std::move(buf), tables(modulus_));
  return *this;
}

CyclotomicScalar& CyclotomicScalar::add_product(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (coeffs_.size() == 1) {
    coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return *this;
  }
  if (a.is_zero() || b.is_zero()) return *this;
  return *this += a * b;
}

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(z_" + std::to_string(modulus_) + ")");
  const auto& t = tables(modulus_);
  // Extended Euclid: keep s_k with s_k * a == r_k (mod phi).
  RationalPolynomial r0 = t.phi;
  RationalPolynomial r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RationalPolynomial s0;
  RationalPolynomial s1{Rational(1)};
  while (r1.size() > 1) {
    RationalPolynomial rem = r0;
    RationalPolynomial q = divide(rem, r1);
    RationalPolynomial qs = multiply(q, s1);
    RationalPolynomial s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because phi is irreducible.
  if (r1.empty()) throw CertificationError("cyclotomic inverse hit a zero remainder");
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return from_polynomial(modulus_, s1);
}

CyclotomicScalar CyclotomicScalar::pow(long exponent) const {
  CyclotomicScalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  CyclotomicScalar acc = one(modulus_);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

std::vector<CyclotomicScalar::Term> CyclotomicScalar::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    out.push_back(Term{coeffs_[i].get_num(), coeffs_[i].get_den(), static_cast<int>(i)});
  }
  return out;
}

std::string CyclotomicScalar::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    Rational c(t.numerator, t.denominator);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (t.power == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'z';
    if (t.power != 1) os << '^' << t.power;
  }
  return os.str();
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
  return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& s) { return os << s.to_string(); }

CyclotomicScalar root_of_unity(int modulus, long k) {
  long p = k % modulus;
  if (p < 0) p += modulus;
  std::vector<Rational> buf(static_cast<std::size_t>(p) + 1);
  buf[static_cast<std::size_t>(p)] = 1;
  return CyclotomicScalar::from_polynomial(modulus, buf);
}

CyclotomicScalar q_integer(int n, const CyclotomicScalar& q) {
  auto acc = CyclotomicScalar::zero(q.modulus());
  auto power = CyclotomicScalar::one(q.modulus());
  for (int t = 0; t < n; ++t) {
    acc += power;
    power *= q;
  }
  return acc;
}

CyclotomicScalar q_factorial(int m, const CyclotomicScalar& q) {
  if (m < 0) throw std::invalid_argument("q_factorial of a negative integer");
  auto acc = CyclotomicScalar::one(q.modulus());
  for (int t = 1; t <= m; ++t) acc *= q_integer(t, q);
  return acc;
}

CyclotomicScalar q_binomial(int n, int k, const CyclotomicScalar& q) {
  if (q.is_zero()) throw std::invalid_argument("q_binomial requires q != 0");
  if (n < 0 || k < 0 || n - k < 0) return CyclotomicScalar::zero(q.modulus());
  // row[j] holds [m, j] while m runs from 0 to n.
  std::vector<CyclotomicScalar> row(static_cast<std::size_t>(k) + 1, CyclotomicScalar::zero(q.modulus()));
  row[0] = CyclotomicScalar::one(q.modulus());
  std::vector<CyclotomicScalar> qpow{CyclotomicScalar::one(q.modulus())};
  for (int j = 1; j <= k; ++j) qpow.push_back(qpow.back() * q);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      auto next = row[static_cast<std::size_t>(j) - 1];
      next.add_product(qpow[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)]);
      row[static_cast<std::size_t>(j)] = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace qlift
