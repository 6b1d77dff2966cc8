#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mmk/cas/higgs.hpp"
#include "mmk/codec/goedel.hpp"
#include "mmk/logic/model.hpp"

namespace mmk::logic {

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnverifiedDerivation : std::runtime_error {
  UnverifiedDerivation() : std::runtime_error("derivation certificate is not verified") {}
};

struct NoCounterexample : std::runtime_error {
  NoCounterexample() : std::runtime_error("no distinguishing interpretation found") {}
};

struct TraceStep {
  std::string label;  // expressibility | propositional | model-assumption | conclusion
  std::string text;
};

// Outcome of a definability check: either the assumed model is forced
// empty (the witness is the element caught in the contradiction), or it is
// inhabited (the witness is the member).
struct DefinabilityReport {
  enum class Verdict { NullModel, NonNullModel };
  Verdict verdict;
  bool witness_is_member = false;
  codec::GoedelNumber witness;
  std::vector<TraceStep> trace;

  nlohmann::json to_json() const;
};

// forall y. forall z. (!G(x,y) -> !M(z)); free variable x.
fol::Formula build_gauge_formula(fol::SymbolTable& table);

// forall y. forall z. (D(x,y) -> M(z)); free variable x.
fol::Formula build_breaking_formula(fol::SymbolTable& table);

// Quantifier-free instances. Note the argument roles: the gauge instance is
// (!G(#i,#j) -> !M(#k)); the breaking instance is (D(#i,#k) -> M(#j)), with
// the mass predicate applied to the derivation's own code.
fol::Formula instantiate_gauge(const Natural& i, const Natural& j, const Natural& k,
                               fol::SymbolTable& table);
fol::Formula instantiate_breaking(const Natural& i, const Natural& k, const Natural& j,
                                  fol::SymbolTable& table);

// No recorded derivation from i: the massive-model assumption collapses.
// Throws PreconditionViolated when (i,j) is in g_facts.
DefinabilityReport check_massiveness_indefinable(const Natural& i, const Natural& j,
                                                 const Natural& k, const FactBase& facts,
                                                 fol::SymbolTable& table);

// A verified chain certificate inhabits the model with the chain's code.
// Throws UnverifiedDerivation unless the record checks out.
DefinabilityReport check_massiveness_definable(const cas::DerivationRecord& cert,
                                               fol::SymbolTable& table);

struct NonEquivalenceWitness {
  Interpretation interpretation;
  bool gauge_value = false;
  bool breaking_value = false;

  nlohmann::json to_json() const;
};

// Exhaustive search over the 8 single-element interpretations; returns the
// first one on which the two closed formulas disagree.
NonEquivalenceWitness check_nonequivalence(fol::SymbolTable& table);

}  // namespace mmk::logic
