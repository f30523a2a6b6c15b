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

// qlift: liftings of quantum linear spaces and their twisting cocycles.
//
// Exit status: 0 all checks pass, 1 a mathematical check fails,
// 2 unreadable/malformed input or dimension cap exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <string>

#include "qlift/deform.hpp"
#include "qlift/errors.hpp"
#include "qlift/io.hpp"

namespace {

using nlohmann::json;
using namespace qlift;

enum class Format { text, json };

struct RunConfig {
  std::string input;
  std::string functional;
  Format format = Format::text;
  std::size_t cap = kDefaultDimensionCap;
  bool cap_given = false;
  bool slow = false;
  int jobs = 1;
  std::size_t spot = 0;
};

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kStructural = 2;

void print_checks(const Report& r) {
  for (const auto& c : r.checks()) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.check;
    if (!c.witness.empty()) std::cout << "  " << c.witness.dump();
    if (c.lhs || c.rhs)
      std::cout << "  lhs=" << (c.lhs ? c.lhs->to_string() : "-") << " rhs=" << (c.rhs ? c.rhs->to_string() : "-");
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
  }
}

int finish(const RunConfig& cfg, const std::string& command, const Report& report, json extra) {
  const int code = report.ok() ? kOk : kViolation;
  if (cfg.format == Format::json) {
    extra["command"] = command;
    extra["status"] = report.ok() ? "pass" : "fail";
    extra["report"] = report_to_json(report);
    std::cout << extra.dump(2) << '\n';
  } else {
    print_checks(report);
    std::cout << (report.ok() ? "result: pass" : "result: fail") << '\n';
  }
  return code;
}

void print_table(const BilinearFunctional& f, const char* name) {
  const Basis& B = f.basis();
  const auto support = f.support();
  std::cout << name << ": " << support.size() << " nonzero entries\n";
  for (const auto& [x, y] : support)
    std::cout << "  " << name << "(" << B.render_r(x) << " ⊗ " << B.render_r(y) << ") = " << f.at(x, y).to_string() << '\n';
}

int cmd_validate(const RunConfig& cfg) {
  const auto p = load_presentation(cfg.input);
  const auto report = validate(p);
  json extra = {{"valid", report.ok()}};
  if (report.ok()) extra["dimension"] = p.dimension();
  if (cfg.format == Format::text && report.ok()) std::cout << "dimension " << p.dimension() << '\n';
  return finish(cfg, "validate", report, extra);
}

int cmd_alpha(const RunConfig& cfg) {
  const Deformation D(load_presentation(cfg.input), cfg.cap, cfg.jobs);
  auto alpha = build_alpha(D, false);
  Report report = cocycle_check(alpha.alpha, D.radford().multiplication(), {cfg.slow, cfg.jobs});
  if (D.presentation().theta() == 2) {
    const auto cmp = functionals_equal(alpha.alpha, alpha_closed_form_quantum_plane(D));
    json w = {{"differences", cmp.differences.size()}};
    if (auto d = cmp.first()) w["first"] = {{"left", D.basis().render_r(d->first)}, {"right", D.basis().render_r(d->second)}};
    report.add("closed form for the quantum plane", cmp.equal, w);
  }
  if (cfg.format == Format::text) {
    std::cout << "plan: " << alpha.plan.render() << '\n';
    print_table(alpha.alpha, "alpha");
  }
  return finish(cfg, "alpha", report, {{"plan", alpha.plan.to_json()}, {"alpha", functional_to_json(alpha.alpha)}});
}

Report spot_associativity(const TwistedAlgebra& T, std::size_t samples) {
  const Basis& B = T.basis();
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<BasisIndex> pick(0, static_cast<BasisIndex>(B.dimension() - 1));
  Report r;
  for (std::size_t k = 0; k < samples; ++k) {
    const BasisIndex a = pick(rng), b = pick(rng), c = pick(rng);
    AlgebraElement left, right;
    for (const auto& [u, cu] : T.direct_product(a, b)) left.add_scaled(T.direct_product(u, c), cu);
    for (const auto& [v, cv] : T.direct_product(b, c)) right.add_scaled(T.direct_product(a, v), cv);
    if (!(left == right)) {
      r.add("twisted associativity on sampled basis triples", false,
            {{"x", B.render(a)}, {"y", B.render(b)}, {"z", B.render(c)}, {"(xy)z", B.render(left)}, {"x(yz)", B.render(right)}});
      return r;
    }
  }
  r.add("twisted associativity on sampled basis triples", true, {{"samples", samples}});
  return r;
}

int cmd_twist(const RunConfig& cfg) {
  const Deformation D(load_presentation(cfg.input), cfg.cap, cfg.jobs);
  const auto alpha = build_alpha(D, false);
  const TwistedAlgebra T = twist(D, alpha.alpha, {true, true, cfg.slow, true});
  Report report = T.construction_report();
  report.append(verify_twist_is_lifting(D, T));
  report.append(check_gamma_hypotheses(D, alpha.alpha));
  if (cfg.spot > 0) report.append(spot_associativity(T, cfg.spot));

  const Basis& B = D.basis();
  json relations = json::array();
  for (int i = 0; i < B.theta(); ++i) {
    std::vector<int> pw(static_cast<std::size_t>(B.theta()), 0);
    pw[static_cast<std::size_t>(i)] = B.r(i) - 1;
    const auto lhs = "x" + std::to_string(i + 1) + "^" + std::to_string(B.r(i) - 1) + " . x" + std::to_string(i + 1);
    relations.push_back({{"lhs", lhs}, {"value", B.render(T.r_product(B.r_index(pw), B.letter(i)))}});
  }
  for (int i = 0; i < B.theta(); ++i)
    for (int j = i + 1; j < B.theta(); ++j) {
      const auto lhs = "x" + std::to_string(j + 1) + " . x" + std::to_string(i + 1);
      relations.push_back({{"lhs", lhs}, {"value", B.render(T.r_product(B.letter(j), B.letter(i)))}});
    }
  if (cfg.format == Format::text) {
    std::cout << "relations of the twisted algebra:\n";
    for (const auto& r : relations) std::cout << "  " << r["lhs"].get<std::string>() << " = " << r["value"].get<std::string>() << '\n';
  }
  return finish(cfg, "twist", report, {{"relations", relations}});
}

int cmd_lambda_xi(const RunConfig& cfg) {
  const Deformation D(load_presentation(cfg.input), cfg.cap, cfg.jobs);
  const auto an = check_lambdaxi_conditions(D);
  const Report report = an.to_report();
  const Basis& B = D.basis();
  json diffs = json::array();
  for (const auto& [x, y] : an.comparison.differences)
    diffs.push_back({{"left", B.render_r(x)},
                     {"right", B.render_r(y)},
                     {"alpha", an.alpha->at(x, y).to_string()},
                     {"lambda pi m", an.lambda->table.at(x, y).to_string()}});
  const std::string verdict = an.comparison.equal ? "equal" : "differ";
  if (cfg.format == Format::text) {
    for (const auto& c : an.conditions)
      std::cout << "condition " << c.name << ": " << (!c.applicable ? "n/a" : c.holds ? "holds" : "fails") << '\n';
    std::cout << "verdict: " << verdict << '\n';
    for (const auto& d : diffs)
      std::cout << "  (" << d["left"].get<std::string>() << " ⊗ " << d["right"].get<std::string>()
                << "): alpha = " << d["alpha"].get<std::string>() << ", lambda pi m = " << d["lambda pi m"].get<std::string>()
                << '\n';
    std::cout << "lambda pi m is a cocycle: " << (an.lambda_cocycle.ok() ? "yes" : "no") << '\n';
  }
  json extra = {{"verdict", verdict},
                {"holding", an.holding ? json(*an.holding) : json(nullptr)},
                {"differences", diffs},
                {"lambda_pi_m_cocycle", an.lambda_cocycle.ok()},
                {"alpha", functional_to_json(*an.alpha)},
                {"lambda_pi_m", functional_to_json(an.lambda->table)}};
  return finish(cfg, "lambda-xi", report, extra);
}

int cmd_commute(const RunConfig& cfg) {
  const Deformation D(load_presentation(cfg.input), cfg.cap, cfg.jobs);
  const auto res = check_commutation(D);
  if (cfg.format == Format::text) {
    std::cout << "factors:";
    for (const auto& f : res.factors) std::cout << ' ' << f;
    std::cout << '\n';
    for (std::size_t u = 0; u < res.matrix.size(); ++u) {
      std::cout << "  " << res.factors[u] << ":";
      for (bool c : res.matrix[u]) std::cout << (c ? " 1" : " 0");
      std::cout << '\n';
    }
  }
  return finish(cfg, "commute", res.report, {{"factors", res.factors}, {"matrix", res.matrix}});
}

int cmd_cocycle_check(const RunConfig& cfg) {
  const Deformation D(load_presentation(cfg.input), cfg.cap, cfg.jobs);
  const auto f = functional_from_json(load_json(cfg.functional), D.coalgebra());
  const auto report = cocycle_check(f, D.radford().multiplication(), {cfg.slow, cfg.jobs});
  return finish(cfg, "cocycle-check", report, json::object());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlift: liftings of quantum linear spaces as cocycle deformations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "presentation file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cfg.cap, "dimension cap (default 4096)")->each([&](const std::string&) { cfg.cap_given = true; });
    sub->add_flag("--slow", cfg.slow, "check cocycle and associativity conditions on every basis triple");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    return sub;
  };
  auto* validate_cmd = common(app.add_subcommand("validate", "check the lifting data"));
  auto* alpha_cmd = common(app.add_subcommand("alpha", "build and certify the twisting cocycle"));
  auto* twist_cmd = common(app.add_subcommand("twist", "twist A by alpha and compare with the lifting"));
  twist_cmd->add_option("--spot", cfg.spot, "also test associativity on this many random basis triples");
  auto* lambda_cmd = common(app.add_subcommand("lambda-xi", "compare alpha with lambda pi m"));
  auto* commute_cmd = common(app.add_subcommand("commute", "pairwise commutation of elementary cocycles"));
  auto* cocycle_cmd = common(app.add_subcommand("cocycle-check", "cocycle check of a functional on A"));
  cocycle_cmd->add_option("--functional", cfg.functional, "functional table (JSON)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kStructural;
  }
  cfg.format = format == "json" ? Format::json : Format::text;
  if (cfg.cap_given)
    std::cerr << "warning: dimension cap set to " << cfg.cap
              << "; cocycle and associativity checks loop over triples and grow with the cube of the dimension\n";

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg);
    if (alpha_cmd->parsed()) return cmd_alpha(cfg);
    if (twist_cmd->parsed()) return cmd_twist(cfg);
    if (lambda_cmd->parsed()) return cmd_lambda_xi(cfg);
    if (commute_cmd->parsed()) return cmd_commute(cfg);
    if (cocycle_cmd->parsed()) return cmd_cocycle_check(cfg);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const CertificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kStructural;
  }
  return kStructural;
}
