#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmk/fol/symbols.hpp"

namespace mmk::fol {

// A numeral term: either the successor string 0''...' (value+1 tokens) or a
// single abbreviated symbol #n registered in the table.
struct Numeral {
  codec::Natural value;
  bool abbreviated = true;
  std::uint64_t code = 0;  // symbol code of "#n" when abbreviated

  bool operator==(const Numeral& o) const {
    return value == o.value && abbreviated == o.abbreviated;
  }
};

struct Term {
  enum class Kind { Variable, Numeral };
  Kind kind;
  std::string name;        // variable name
  std::uint64_t code = 0;  // variable symbol code
  Numeral numeral;         // when kind == Numeral

  static Term make_variable(const SymbolEntry& v);
  static Term make_numeral(Numeral n);
  bool operator==(const Term& o) const;
};

using TokenString = std::vector<std::uint64_t>;  // symbol codes, in order

// Immutable formula tree over the alphabet: forall, !, ->, predicate
// applications, and bare atoms (0-ary predicates). The token string and the
// printed text are both derived from the tree, so the three views never
// disagree.
class Formula {
public:
  enum class Kind { Forall, Not, Implies, Pred, Atom };

  Formula();  // empty placeholder atom; assign before use

  static Formula forall(const SymbolEntry& var, Formula body);
  static Formula negation(Formula body);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula predicate(const SymbolEntry& p, std::vector<Term> args);
  static Formula atom(const SymbolEntry& s);

  Kind kind() const { return node_->kind; }
  const std::string& head_name() const { return node_->name; }
  std::uint64_t head_code() const { return node_->code; }
  const std::vector<Term>& args() const { return node_->args; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  std::size_t child_count() const { return node_->children.size(); }

  std::set<std::string> free_variables() const;
  bool is_closed() const { return free_variables().empty(); }

  TokenString tokens() const;
  std::string print() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

private:
  struct Node {
    Kind kind;
    std::string name;        // quantified variable / predicate / atom name
    std::uint64_t code = 0;  // its symbol code
    std::vector<Term> args;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  std::vector<std::string> expected;
  ParseError(std::string msg, std::size_t pos, std::vector<std::string> exp = {});
};

struct NoFreeOccurrence : std::runtime_error {
  explicit NoFreeOccurrence(const std::string& var)
      : std::runtime_error("variable has no free occurrence: " + var) {}
};

// Text grammar:
//   formula := 'forall' VAR '.' formula
//            | '!' formula
//            | '(' formula '->' formula ')'
//            | PRED '(' termlist ')'
//            | PRED
//   term    := VAR | '#' NAT | '0' ('\'')*
// Whitespace is insignificant. PRED must be a registered predicate name;
// abbreviated numerals are registered in `table` on first sight.
Formula parse_formula(std::string_view text, SymbolTable& table);

// Rebuilds the tree from a token string (the inverse of Formula::tokens).
Formula parse_tokens(std::span<const std::uint64_t> tokens, SymbolTable& table);

// Replaces every free occurrence of `var` by the numeral term. Terms are
// closed, so no capture can occur. Throws NoFreeOccurrence when var is not
// free in f; registers the abbreviation symbol when needed.
Formula substitute(const Formula& f, std::string_view var, const codec::Natural& value,
                   SymbolTable& table, bool abbreviated = true);

// Numeral construction helpers.
Numeral make_abbreviated_numeral(const codec::Natural& value, SymbolTable& table);
Numeral make_successor_numeral(const codec::Natural& value);

}  // namespace mmk::fol
