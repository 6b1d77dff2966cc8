#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "mmk/codec/natural.hpp"
#include "mmk/fol/formula.hpp"

namespace mmk::logic {

using codec::Natural;
using NaturalPair = std::pair<Natural, Natural>;

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Finite interpretation for the four working predicates. Everything a
// closed formula over G/D/M/T needs to get a classical truth value.
struct Interpretation {
  std::set<Natural> domain;
  std::set<NaturalPair> ext_G;
  std::set<NaturalPair> ext_D;
  std::set<Natural> ext_M;
  std::set<Natural> ext_T;

  nlohmann::json to_json() const;
};

// Classical evaluation: forall is a conjunction over the domain, -> is
// material implication. Throws EvalError on free variables, predicates
// without an extension, or arity mismatches.
bool eval(const fol::Formula& f, const Interpretation& itp);

// Recorded arithmetic facts, standing in for expressibility: a pair is in
// g_facts iff the corresponding derivation relation holds, likewise d_facts
// for the diagonalization relation.
struct FactBase {
  std::set<NaturalPair> g_facts;
  std::set<NaturalPair> d_facts;

  nlohmann::json to_json() const;
  static FactBase from_json(const nlohmann::json& j);
};

}  // namespace mmk::logic
