#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mmk/logic/checks.hpp"

namespace mmk::logic {

// A diagonalization record: the open formula, its code m, the sentence
// obtained by substituting #m for the free variable, and that sentence's
// code n. decode(n) giving back the sentence is the fixed-point check.
struct FixedPoint {
  fol::Formula open_formula;
  Natural m;
  fol::Formula sentence;
  Natural n;
  bool decode_matches = false;

  nlohmann::json to_json() const;
};

struct Assumption {
  std::string name;   // e.g. "consistency", "omega-consistency"
  std::string text;
  // every assumption ships unverified: these demos illustrate the argument
  // shape, they do not prove the metatheory
  std::string status = "assumption-not-verified";
};

struct UnprovabilityArgument {
  std::string claim;
  std::vector<std::string> steps;
  std::vector<Assumption> assumptions;
};

// Both halves of the unprovability argument for the self-referential
// sentence S = (forall y. !G(#m,y)) built by diagonalization.
struct GoedelSentenceReport {
  FixedPoint fixed_point;
  FactBase recorded_facts;  // d(m, n)
  std::vector<UnprovabilityArgument> arguments;

  nlohmann::json to_json() const;
};

GoedelSentenceReport goedel_sentence_demo(fol::SymbolTable& table);

// The truth-predicate analogue: A(x) = forall y. (D(x,y) -> !T(y)),
// diagonalized and pushed through the null-model argument for T.
struct TarskiSentenceReport {
  FixedPoint fixed_point;
  FactBase recorded_facts;
  DefinabilityReport definability;

  nlohmann::json to_json() const;
};

TarskiSentenceReport tarski_sentence_demo(fol::SymbolTable& table);

}  // namespace mmk::logic
