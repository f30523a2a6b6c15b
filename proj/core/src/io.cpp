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

#include "qlift/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qlift/errors.hpp"

namespace qlift {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw StructuralError("field '" + field + "': " + what);
}

json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) bad(field, "not an integer: " + j.get<std::string>());
    return n;
  }
  bad(field, "expected an integer");
}

long small_integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return static_cast<long>(j.get<long long>());
}

std::vector<long> integer_vector(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(small_integer(j[k], field + "[" + std::to_string(k + 1) + "]"));
  return out;
}

const json& member(const json& j, const char* key, const std::string& field) {
  auto it = j.find(key);
  if (it == j.end()) bad(field, std::string("missing key '") + key + "'");
  return *it;
}

std::vector<int> powers_from_json(const json& j, const Basis& B, const std::string& field) {
  const auto v = integer_vector(j, field);
  if (static_cast<int>(v.size()) != B.theta()) bad(field, "expected " + std::to_string(B.theta()) + " exponents");
  std::vector<int> out(v.begin(), v.end());
  for (int i = 0; i < B.theta(); ++i)
    if (out[static_cast<std::size_t>(i)] < 0 || out[static_cast<std::size_t>(i)] >= B.r(i))
      bad(field, "exponent of x" + std::to_string(i + 1) + " out of range [0, " + std::to_string(B.r(i)) + ")");
  return out;
}

}  // namespace

json scalar_to_json(const CyclotomicScalar& s) {
  json out = json::array();
  for (const auto& t : s.terms()) out.push_back({integer_to_json(t.numerator), integer_to_json(t.denominator), t.power});
  return out;
}

CyclotomicScalar scalar_from_json(const json& j, int modulus, const std::string& field) {
  if (j.is_number_integer()) return CyclotomicScalar::rational(modulus, Rational(integer_from_json(j, field)));
  if (j.is_string()) {
    Rational value;
    if (value.set_str(j.get<std::string>(), 10) != 0 || sgn(value.get_den()) == 0)
      bad(field, "not a rational: " + j.get<std::string>());
    value.canonicalize();
    return CyclotomicScalar::rational(modulus, value);
  }
  if (!j.is_array()) bad(field, "expected a list of [numerator, denominator, power] triples");
  std::vector<CyclotomicScalar::Term> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k + 1) + "]";
    if (!j[k].is_array() || j[k].size() != 3) bad(f, "expected [numerator, denominator, power]");
    Integer den = integer_from_json(j[k][1], f);
    if (sgn(den) == 0) bad(f, "zero denominator");
    terms.push_back({integer_from_json(j[k][0], f), std::move(den), static_cast<int>(small_integer(j[k][2], f))});
  }
  return CyclotomicScalar::from_terms(modulus, terms);
}

json presentation_to_json(const LiftingPresentation& p) {
  const auto& G = p.group();
  json out;
  out["group"] = {{"orders", std::vector<int>(G.orders().begin(), G.orders().end())}};
  out["theta"] = p.theta();
  out["g"] = json::array();
  out["chi"] = json::array();
  out["a"] = json::array();
  out["r"] = json::array();
  for (int i = 0; i < p.theta(); ++i) {
    out["g"].push_back(p.g(i).exponents);
    out["chi"].push_back(p.chi(i).exponents);
    out["a"].push_back(scalar_to_json(p.a(i)));
    out["r"].push_back(p.r(i));
  }
  out["a_off"] = json::array();
  for (const auto& od : p.off_diagonal())
    out["a_off"].push_back({{"i", od.i + 1}, {"j", od.j + 1}, {"value", scalar_to_json(od.value)}});
  out["modulus"] = p.modulus();
  return out;
}

LiftingPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) bad("presentation", "expected an object");
  static const std::set<std::string> known{"group", "theta", "g", "chi", "a", "a_off", "modulus", "r", "name", "description"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) bad(key, "unknown key");
  }
  const json& grp = member(j, "group", "presentation");
  if (!grp.is_object()) bad("group", "expected an object");
  const auto orders_l = integer_vector(member(grp, "orders", "group"), "group.orders");
  std::vector<int> orders;
  for (std::size_t k = 0; k < orders_l.size(); ++k) {
    if (orders_l[k] < 1 || orders_l[k] > 1 << 20) bad("group.orders[" + std::to_string(k + 1) + "]", "order must be in [1, 2^20]");
    orders.push_back(static_cast<int>(orders_l[k]));
  }
  if (orders.empty()) bad("group.orders", "at least one cyclic factor required");
  Group G(orders);

  const long theta = small_integer(member(j, "theta", "presentation"), "theta");
  if (theta < 1) bad("theta", "must be at least 1");
  const json& gj = member(j, "g", "presentation");
  const json& cj = member(j, "chi", "presentation");
  if (!gj.is_array() || static_cast<long>(gj.size()) != theta) bad("g", "expected " + std::to_string(theta) + " group elements");
  if (!cj.is_array() || static_cast<long>(cj.size()) != theta) bad("chi", "expected " + std::to_string(theta) + " characters");
  std::vector<GroupElement> g;
  std::vector<Character> chi;
  for (long i = 0; i < theta; ++i) {
    const std::string gf = "g[" + std::to_string(i + 1) + "]", cf = "chi[" + std::to_string(i + 1) + "]";
    const auto ge = integer_vector(gj[static_cast<std::size_t>(i)], gf);
    const auto ce = integer_vector(cj[static_cast<std::size_t>(i)], cf);
    if (ge.size() != orders.size()) bad(gf, "expected " + std::to_string(orders.size()) + " exponents");
    if (ce.size() != orders.size()) bad(cf, "expected " + std::to_string(orders.size()) + " exponents");
    g.push_back(G.element(ge));
    chi.push_back(G.character(ce));
  }

  int modulus = 0;
  if (j.contains("modulus")) {
    const long m = small_integer(j["modulus"], "modulus");
    if (m < 1 || m > 1 << 16) bad("modulus", "must be in [1, 65536]");
    modulus = static_cast<int>(m);
  }
  try {
    modulus = LiftingPresentation::field_modulus(G, modulus);
  } catch (const StructuralError& e) {
    bad("modulus", e.what());
  }

  std::vector<CyclotomicScalar> a;
  if (j.contains("a")) {
    const json& aj = j["a"];
    if (!aj.is_array() || static_cast<long>(aj.size()) != theta) bad("a", "expected " + std::to_string(theta) + " scalars");
    for (long i = 0; i < theta; ++i)
      a.push_back(scalar_from_json(aj[static_cast<std::size_t>(i)], modulus, "a[" + std::to_string(i + 1) + "]"));
  }

  std::vector<LiftingPresentation::OffDiagonal> off;
  if (j.contains("a_off")) {
    const json& oj = j["a_off"];
    if (!oj.is_array()) bad("a_off", "expected an array");
    for (std::size_t k = 0; k < oj.size(); ++k) {
      const std::string f = "a_off[" + std::to_string(k + 1) + "]";
      if (!oj[k].is_object()) bad(f, "expected {\"i\", \"j\", \"value\"}");
      const long i = small_integer(member(oj[k], "i", f), f + ".i");
      const long jj = small_integer(member(oj[k], "j", f), f + ".j");
      if (i < 1 || jj > theta || i >= jj) bad(f, "need 1 <= i < j <= theta");
      off.push_back({static_cast<int>(i - 1), static_cast<int>(jj - 1), scalar_from_json(member(oj[k], "value", f), modulus, f + ".value")});
    }
  }

  std::vector<int> declared;
  if (j.contains("r")) {
    const auto rv = integer_vector(j["r"], "r");
    if (static_cast<long>(rv.size()) != theta) bad("r", "expected " + std::to_string(theta) + " entries");
    declared.assign(rv.begin(), rv.end());
  }
  return LiftingPresentation(G, std::move(g), std::move(chi), std::move(a), std::move(off), modulus, std::move(declared));
}

json functional_to_json(const BilinearFunctional& f) {
  const Basis& B = f.basis();
  json out = json::array();
  for (const auto& [x, y] : f.support())
    out.push_back({{"left", B.powers(x)}, {"right", B.powers(y)}, {"value", scalar_to_json(f.at(x, y))}});
  return out;
}

BilinearFunctional functional_from_json(const json& j, std::shared_ptr<const Coalgebra> coalgebra) {
  BilinearFunctional f(coalgebra);
  const Basis& B = f.basis();
  if (!j.is_array()) bad("functional", "expected an array of {\"left\", \"right\", \"value\"}");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "functional[" + std::to_string(k + 1) + "]";
    if (!j[k].is_object()) bad(field, "expected an object");
    const auto x = B.r_index(powers_from_json(member(j[k], "left", field), B, field + ".left"));
    const auto y = B.r_index(powers_from_json(member(j[k], "right", field), B, field + ".right"));
    if (!seen.insert({x, y}).second) bad(field, "duplicate entry");
    f.set(x, y, scalar_from_json(member(j[k], "value", field), B.modulus(), field + ".value"));
  }
  return f;
}

json check_to_json(const CheckResult& c) {
  json out = {{"check", c.check}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}};
  if (c.lhs) out["lhs"] = scalar_to_json(*c.lhs);
  if (c.rhs) out["rhs"] = scalar_to_json(*c.rhs);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json report_to_json(const Report& r) {
  json out = json::array();
  for (const auto& c : r.checks()) out.push_back(check_to_json(c));
  return out;
}

Report report_from_json(const json& j, int modulus) {
  if (!j.is_array()) bad("report", "expected an array");
  Report r;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = "report[" + std::to_string(k + 1) + "]";
    const json& c = j[k];
    if (!c.is_object()) bad(f, "expected an object");
    const json& name = member(c, "check", f);
    const json& status = member(c, "status", f);
    if (!name.is_string()) bad(f + ".check", "expected a string");
    if (status != "pass" && status != "fail") bad(f + ".status", "expected \"pass\" or \"fail\"");
    CheckResult out{name.get<std::string>(), status == "pass", c.value("witness", json::object()), std::nullopt, std::nullopt, {}};
    if (c.contains("lhs")) out.lhs = scalar_from_json(c["lhs"], modulus, f + ".lhs");
    if (c.contains("rhs")) out.rhs = scalar_from_json(c["rhs"], modulus, f + ".rhs");
    if (c.contains("detail")) out.detail = c["detail"].get<std::string>();
    r.add(std::move(out));
  }
  return r;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
    const auto nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t column = nl == std::string::npos || pos == 0 ? pos + 1 : pos - nl;
    throw StructuralError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

LiftingPresentation load_presentation(const std::filesystem::path& path) {
  const json j = load_json(path);
  try {
    return presentation_from_json(j);
  } catch (const StructuralError& e) {
    throw StructuralError(path.string() + ": " + e.what());
  }
}

}  // namespace qlift
