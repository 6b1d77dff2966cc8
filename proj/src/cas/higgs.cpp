#include "mmk/cas/higgs.hpp"

namespace mmk::cas {

using nlohmann::json;

namespace {

Expr atom(Atom a) { return Expr::atom(a); }
Expr num(long long n, long long d = 1) { return Expr::num(Rational(n, d)); }

Expr scalar_field() { return atom(Atom::Rho) * atom(Atom::E); }

// covariant derivative (d - ieA) phi, with the derivative kept formal
Expr covariant(const Expr& phi) {
  return Expr::deriv_node(phi) - atom(Atom::I) * atom(Atom::Ecoup) * atom(Atom::A) * phi;
}

Expr kinetic_term() { return num(-1, 4) * atom(Atom::F); }

Expr potential(int mass_sign) {
  Expr phi = scalar_field();
  Expr density = Expr::dagger_node(phi) * phi;
  Expr quadratic = Expr::pow(atom(Atom::Mu), 2) * density;
  Expr quartic = atom(Atom::Lambda) * Expr::pow(density, 2);
  return mass_sign > 0 ? quadratic - quartic : quartic - quadratic;
}

}  // namespace

Expr massless_lagrangian() {
  Expr phi = scalar_field();
  Expr cov = covariant(phi);
  return kinetic_term() + Expr::dagger_node(cov) * cov + potential(+1);
}

Expr massless_lagrangian_symmetric_signs() {
  Expr phi = scalar_field();
  Expr cov = covariant(phi);
  return kinetic_term() + Expr::dagger_node(cov) * cov + potential(-1);
}

std::vector<ChainStep> higgs_chain() {
  std::vector<ChainStep> steps;
  steps.push_back({"massless", massless_lagrangian()});

  // rho^2 (dtheta - eA)^2 + drho^2 + mu^2 rho^2 - lambda rho^4
  Expr phase_sq = Expr::pow(atom(Atom::Dtheta) - atom(Atom::Ecoup) * atom(Atom::A), 2);
  Expr polar = kinetic_term() + Expr::pow(atom(Atom::Rho), 2) * phase_sq +
               Expr::pow(atom(Atom::Drho), 2) +
               Expr::pow(atom(Atom::Mu), 2) * Expr::pow(atom(Atom::Rho), 2) -
               atom(Atom::Lambda) * Expr::pow(atom(Atom::Rho), 4);
  steps.push_back({"polar", polar});

  // the Goldstone phase absorbed into B; mass term appears
  Expr b_sq = Expr::pow(atom(Atom::B), 2);
  Expr mass_term = num(1, 2) * Expr::pow(atom(Atom::Mass), 2) * b_sq;
  Expr gauge_terms = mass_term +
                     Expr::pow(atom(Atom::Ecoup), 2) * atom(Atom::Vev) * atom(Atom::Chi) * b_sq +
                     num(1, 2) * Expr::pow(atom(Atom::Ecoup), 2) * Expr::pow(atom(Atom::Chi), 2) * b_sq +
                     num(1, 2) * Expr::pow(atom(Atom::Dchi), 2);
  Expr unitary = kinetic_term() + gauge_terms +
                 Expr::pow(atom(Atom::Mu), 2) * Expr::pow(atom(Atom::Rho), 2) -
                 atom(Atom::Lambda) * Expr::pow(atom(Atom::Rho), 4);
  steps.push_back({"unitary-gauge", unitary});

  // potential expanded around the vacuum value
  Expr expanded = kinetic_term() + gauge_terms +
                  num(1, 4) * Expr::pow(atom(Atom::Mu), 4) * Expr::pow(atom(Atom::Lambda), -1) -
                  num(1, 4) * atom(Atom::Lambda) * Expr::pow(atom(Atom::Chi), 4) -
                  atom(Atom::SqrtLambda) * atom(Atom::Mu) * Expr::pow(atom(Atom::Chi), 3) -
                  Expr::pow(atom(Atom::Mu), 2) * Expr::pow(atom(Atom::Chi), 2);
  steps.push_back({"expanded", expanded});
  return steps;
}

namespace {

std::vector<StepCheck> run_checks(const std::vector<ChainStep>& steps) {
  std::vector<StepCheck> checks;
  auto check = [&](std::size_t a, std::size_t b) {
    Verdict v = verify_step(steps[a].expr, steps[b].expr);
    checks.push_back(
        {steps[a].name, steps[b].name, v.verified, v.verified ? "" : v.residual.to_string()});
  };
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) check(i, i + 1);
  if (steps.size() > 2) check(0, steps.size() - 1);  // whole-chain check
  return checks;
}

bool all_verified(const std::vector<StepCheck>& checks) {
  for (const auto& c : checks)
    if (!c.verified) return false;
  return !checks.empty();
}

}  // namespace

DerivationRecord verify_higgs_chain() {
  DerivationRecord record;
  record.steps = higgs_chain();
  record.checks = run_checks(record.steps);
  record.overall = all_verified(record.checks);
  return record;
}

json DerivationRecord::to_json() const {
  json steps_json = json::array();
  for (const auto& s : steps) steps_json.push_back({{"name", s.name}, {"expr", s.expr.print()}});
  json checks_json = json::array();
  for (const auto& c : checks)
    checks_json.push_back(
        {{"from", c.from}, {"to", c.to}, {"verified", c.verified}, {"residual", c.residual}});
  return json{{"kind", "abelian-higgs-chain"},
              {"steps", steps_json},
              {"checks", checks_json},
              {"overall", overall ? "verified" : "mismatch"}};
}

DerivationRecord DerivationRecord::from_json(const json& j) {
  DerivationRecord record;
  for (const auto& s : j.at("steps"))
    record.steps.push_back({s.at("name").get<std::string>(),
                            parse_expr(s.at("expr").get<std::string>())});
  if (record.steps.empty()) throw CasError("certificate contains no steps");
  record.checks = run_checks(record.steps);
  record.overall = all_verified(record.checks);
  return record;
}

fol::Derivation export_chain(const DerivationRecord& record, fol::SymbolTable& table) {
  if (!record.overall) throw CasError("only a verified chain can be exported");
  fol::Derivation out;
  out.kind = fol::Derivation::Kind::CasVerified;
  out.certificate = record.to_json().dump();
  for (const auto& step : record.steps) {
    std::string name = step.expr.print();
    auto existing = table.find(name);
    const fol::SymbolEntry& entry =
        existing ? *existing : table.register_symbol(name, fol::SymbolKind::Predicate);
    out.steps.push_back(fol::Formula::atom(entry));
  }
  return out;
}

}  // namespace mmk::cas
