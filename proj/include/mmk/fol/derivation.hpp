#pragma once

#include <string>
#include <vector>

#include "mmk/fol/formula.hpp"

namespace mmk::fol {

// A finite, non-empty sequence of formulas. `kind` records what justifies
// the adjacency of the steps; a cas-verified derivation carries the
// verifier's certificate (serialized JSON) alongside.
struct Derivation {
  enum class Kind { OpaqueJustified, CasVerified };

  std::vector<Formula> steps;
  Kind kind = Kind::OpaqueJustified;
  std::string certificate;  // nonempty iff kind == CasVerified

  bool operator==(const Derivation& o) const { return steps == o.steps; }
};

// Derivation file format: one formula per line, '#' starts a comment.
Derivation parse_derivation_text(std::string_view text, SymbolTable& table);

}  // namespace mmk::fol
