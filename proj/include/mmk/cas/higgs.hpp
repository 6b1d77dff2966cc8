#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mmk/cas/expr.hpp"
#include "mmk/cas/normal_form.hpp"
#include "mmk/fol/derivation.hpp"

namespace mmk::cas {

struct ChainStep {
  std::string name;
  Expr expr;
};

struct StepCheck {
  std::string from, to;
  bool verified = false;
  std::string residual;  // serialized normal form when not verified
};

// The verified rewriting chain from the massless Lagrangian to the form
// with the explicit mass term, plus the per-step and whole-chain checks.
struct DerivationRecord {
  std::vector<ChainStep> steps;
  std::vector<StepCheck> checks;
  bool overall = false;

  nlohmann::json to_json() const;

  // Parses the steps back out of the JSON and recomputes every check, so a
  // tampered certificate cannot claim Verified.
  static DerivationRecord from_json(const nlohmann::json& j);
};

// Step 0: -1/4 F + (Dphi)^dagger Dphi + mu^2 phi^dagger phi - lambda (phi^dagger phi)^2,
// with phi = rho e^{i theta} and D = d - ieA. Signs chosen so the potential
// has its minimum away from zero and the rewriting chain closes.
Expr massless_lagrangian();

// Same kinetic terms with the opposite potential signs
// (-mu^2 phi^dagger phi + lambda (phi^dagger phi)^2); kept for the
// indefinability run, which needs a massless Lagrangian as raw input.
Expr massless_lagrangian_symmetric_signs();

// The four chain steps: massless, polar, unitary-gauge, expanded.
std::vector<ChainStep> higgs_chain();

// Runs the three adjacent checks plus the whole-chain check.
DerivationRecord verify_higgs_chain();

// Registers each step's printed form as a symbol and wraps the chain as a
// cas-verified derivation (the certificate rides along as JSON).
fol::Derivation export_chain(const DerivationRecord& record, fol::SymbolTable& table);

}  // namespace mmk::cas
