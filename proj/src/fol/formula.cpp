#include "mmk/fol/formula.hpp"

#include <cctype>

namespace mmk::fol {

namespace {
constexpr std::uint64_t kSuccessorPrintLimit = 1000000;  // token-expansion guard
}

Term Term::make_variable(const SymbolEntry& v) {
  Term t;
  t.kind = Kind::Variable;
  t.name = v.name;
  t.code = v.code;
  return t;
}

Term Term::make_numeral(Numeral n) {
  Term t;
  t.kind = Kind::Numeral;
  t.numeral = std::move(n);
  return t;
}

bool Term::operator==(const Term& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::Variable) return code == o.code;
  return numeral == o.numeral;
}

Formula::Formula() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  node_ = std::move(n);
}

Formula Formula::forall(const SymbolEntry& var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->name = var.name;
  n->code = var.code;
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::negation(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Formula(std::move(n));
}

Formula Formula::predicate(const SymbolEntry& p, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pred;
  n->name = p.name;
  n->code = p.code;
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::atom(const SymbolEntry& s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = s.name;
  n->code = s.code;
  return Formula(std::move(n));
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Forall: {
      bool inserted = bound.insert(f.head_name()).second;
      collect_free(f.child(0), bound, out);
      if (inserted) bound.erase(f.head_name());
      return;
    }
    case Formula::Kind::Not:
      collect_free(f.child(0), bound, out);
      return;
    case Formula::Kind::Implies:
      collect_free(f.child(0), bound, out);
      collect_free(f.child(1), bound, out);
      return;
    case Formula::Kind::Pred:
      for (const auto& t : f.args())
        if (t.kind == Term::Kind::Variable && !bound.count(t.name)) out.insert(t.name);
      return;
    case Formula::Kind::Atom:
      return;
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

namespace {

void term_tokens(const Term& t, TokenString& out) {
  if (t.kind == Term::Kind::Variable) {
    out.push_back(t.code);
    return;
  }
  const Numeral& n = t.numeral;
  if (n.abbreviated) {
    out.push_back(n.code);
    return;
  }
  if (n.value >= codec::Natural(kSuccessorPrintLimit))
    throw std::length_error("successor-form numeral too long to materialize");
  out.push_back(SymbolTable::kZero);
  for (std::uint64_t i = 0, count = n.value.to_uint64(); i < count; ++i)
    out.push_back(SymbolTable::kSuccessor);
}

void tree_tokens(const Formula& f, TokenString& out) {
  switch (f.kind()) {
    case Formula::Kind::Forall:
      out.push_back(SymbolTable::kForall);
      out.push_back(f.head_code());
      tree_tokens(f.child(0), out);
      return;
    case Formula::Kind::Not:
      out.push_back(SymbolTable::kNot);
      tree_tokens(f.child(0), out);
      return;
    case Formula::Kind::Implies:
      out.push_back(SymbolTable::kLParen);
      tree_tokens(f.child(0), out);
      out.push_back(SymbolTable::kImplies);
      tree_tokens(f.child(1), out);
      out.push_back(SymbolTable::kRParen);
      return;
    case Formula::Kind::Pred: {
      out.push_back(f.head_code());
      out.push_back(SymbolTable::kLParen);
      bool first = true;
      for (const auto& t : f.args()) {
        if (!first) out.push_back(SymbolTable::kComma);
        first = false;
        term_tokens(t, out);
      }
      out.push_back(SymbolTable::kRParen);
      return;
    }
    case Formula::Kind::Atom:
      out.push_back(f.head_code());
      return;
  }
}

std::string term_text(const Term& t) {
  if (t.kind == Term::Kind::Variable) return t.name;
  const Numeral& n = t.numeral;
  if (n.abbreviated) return "#" + n.value.to_decimal();
  if (n.value >= codec::Natural(kSuccessorPrintLimit))
    throw std::length_error("successor-form numeral too long to print");
  std::string s = "0";
  s.append(static_cast<std::size_t>(n.value.to_uint64()), '\'');
  return s;
}

void tree_text(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Forall:
      out += "forall ";
      out += f.head_name();
      out += ". ";
      tree_text(f.child(0), out);
      return;
    case Formula::Kind::Not:
      out += "!";
      tree_text(f.child(0), out);
      return;
    case Formula::Kind::Implies:
      out += "(";
      tree_text(f.child(0), out);
      out += " -> ";
      tree_text(f.child(1), out);
      out += ")";
      return;
    case Formula::Kind::Pred: {
      out += f.head_name();
      out += "(";
      bool first = true;
      for (const auto& t : f.args()) {
        if (!first) out += ",";
        first = false;
        out += term_text(t);
      }
      out += ")";
      return;
    }
    case Formula::Kind::Atom:
      out += f.head_name();
      return;
  }
}

}  // namespace

TokenString Formula::tokens() const {
  TokenString out;
  tree_tokens(*this, out);
  return out;
}

std::string Formula::print() const {
  std::string out;
  tree_text(*this, out);
  return out;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Forall:
      return head_code() == o.head_code() && child(0) == o.child(0);
    case Kind::Not:
      return child(0) == o.child(0);
    case Kind::Implies:
      return child(0) == o.child(0) && child(1) == o.child(1);
    case Kind::Pred:
      return head_code() == o.head_code() && args() == o.args();
    case Kind::Atom:
      return head_code() == o.head_code();
  }
  return false;
}

ParseError::ParseError(std::string msg, std::size_t pos, std::vector<std::string> exp)
    : std::runtime_error(msg + " at position " + std::to_string(pos)),
      position(pos),
      expected(std::move(exp)) {}

Numeral make_abbreviated_numeral(const codec::Natural& value, SymbolTable& table) {
  Numeral n;
  n.value = value;
  n.abbreviated = true;
  n.code = table.numeral_symbol(value).code;
  return n;
}

Numeral make_successor_numeral(const codec::Natural& value) {
  Numeral n;
  n.value = value;
  n.abbreviated = false;
  return n;
}

// ---------------------------------------------------------------------------
// Text parser
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

struct TextParser {
  Lexer lex;
  SymbolTable& table;

  Formula formula() {
    char c = lex.peek();
    if (c == '!') {
      lex.consume('!');
      return Formula::negation(formula());
    }
    if (c == '(') {
      lex.consume('(');
      Formula lhs = formula();
      if (!lex.consume_arrow()) throw ParseError("expected '->'", lex.pos, {"->"});
      Formula rhs = formula();
      if (!lex.consume(')')) throw ParseError("expected ')'", lex.pos, {")"});
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = lex.pos;
      std::string name = lex.ident();
      if (name.empty()) throw ParseError("expected formula", lex.pos, {"forall", "!", "(", "PRED"});
      if (name == "forall") {
        std::size_t var_at = lex.pos;
        std::string var = lex.ident();
        auto entry = table.find(var);
        if (!entry || entry->kind != SymbolKind::Variable)
          throw ParseError("expected variable after 'forall'", var_at, {"x", "y", "z"});
        if (!lex.consume('.')) throw ParseError("expected '.'", lex.pos, {"."});
        return Formula::forall(*entry, formula());
      }
      auto entry = table.find(name);
      if (!entry || entry->kind != SymbolKind::Predicate)
        throw ParseError("unknown predicate '" + name + "'", at, {"PRED"});
      if (!lex.consume('(')) return Formula::atom(*entry);
      std::vector<Term> args;
      args.push_back(term());
      while (lex.consume(',')) args.push_back(term());
      if (!lex.consume(')')) throw ParseError("expected ')'", lex.pos, {")", ","});
      return Formula::predicate(*entry, std::move(args));
    }
    throw ParseError("expected formula", lex.pos, {"forall", "!", "(", "PRED"});
  }

  Term term() {
    char c = lex.peek();
    if (c == '#') {
      lex.consume('#');
      std::string digits = lex.digits();
      if (digits.empty()) throw ParseError("expected digits after '#'", lex.pos, {"NAT"});
      return Term::make_numeral(make_abbreviated_numeral(codec::Natural::from_decimal(digits), table));
    }
    if (c == '0') {
      lex.consume('0');
      codec::Natural n;
      while (lex.consume('\'')) n.add_small(1);
      return Term::make_numeral(make_successor_numeral(n));
    }
    std::size_t at = lex.pos;
    std::string name = lex.ident();
    auto entry = table.find(name);
    if (!entry || entry->kind != SymbolKind::Variable)
      throw ParseError("expected term", at, {"x", "y", "z", "#NAT", "0"});
    if (lex.peek() == '\'')
      throw ParseError("successor applies to numerals only", lex.pos, {",", ")"});
    return Term::make_variable(*entry);
  }
};

}  // namespace

Formula parse_formula(std::string_view text, SymbolTable& table) {
  TextParser p{Lexer{text}, table};
  Formula f = p.formula();
  if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos, {"end of input"});
  return f;
}

// ---------------------------------------------------------------------------
// Token-string parser (inverse of Formula::tokens)
// ---------------------------------------------------------------------------

namespace {

struct TokenParser {
  std::span<const std::uint64_t> toks;
  std::size_t pos = 0;
  SymbolTable& table;

  std::uint64_t peek() const { return pos < toks.size() ? toks[pos] : 0; }
  std::uint64_t next() {
    if (pos >= toks.size()) throw ParseError("unexpected end of token string", pos);
    return toks[pos++];
  }
  void expect(std::uint64_t code, const char* what) {
    if (next() != code) throw ParseError(std::string("expected ") + what, pos - 1);
  }

  SymbolEntry entry(std::uint64_t code) {
    auto e = table.find_code(code);
    if (!e) throw ParseError("unregistered symbol code in token string", pos);
    return *e;
  }

  Formula formula() {
    std::uint64_t c = next();
    if (c == SymbolTable::kNot) return Formula::negation(formula());
    if (c == SymbolTable::kForall) {
      SymbolEntry var = entry(next());
      if (var.kind != SymbolKind::Variable) throw ParseError("expected variable token", pos - 1);
      return Formula::forall(var, formula());
    }
    if (c == SymbolTable::kLParen) {
      Formula lhs = formula();
      expect(SymbolTable::kImplies, "'->' token");
      Formula rhs = formula();
      expect(SymbolTable::kRParen, "')' token");
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
    SymbolEntry head = entry(c);
    if (head.kind != SymbolKind::Predicate)
      throw ParseError("expected predicate or connective token", pos - 1);
    if (peek() != SymbolTable::kLParen) return Formula::atom(head);
    next();
    std::vector<Term> args;
    args.push_back(term());
    while (peek() == SymbolTable::kComma) {
      next();
      args.push_back(term());
    }
    expect(SymbolTable::kRParen, "')' token");
    return Formula::predicate(head, std::move(args));
  }

  Term term() {
    std::uint64_t c = next();
    if (c == SymbolTable::kZero) {
      codec::Natural n;
      while (peek() == SymbolTable::kSuccessor) {
        next();
        n.add_small(1);
      }
      return Term::make_numeral(make_successor_numeral(n));
    }
    SymbolEntry e = entry(c);
    if (e.kind == SymbolKind::Variable) return Term::make_variable(e);
    if (e.kind == SymbolKind::NumeralAbbrev) {
      Numeral n;
      n.value = codec::Natural::from_decimal(std::string_view(e.name).substr(1));
      n.abbreviated = true;
      n.code = e.code;
      return Term::make_numeral(n);
    }
    throw ParseError("expected term token", pos - 1);
  }
};

}  // namespace

Formula parse_tokens(std::span<const std::uint64_t> tokens, SymbolTable& table) {
  TokenParser p{tokens, 0, table};
  Formula f = p.formula();
  if (p.pos != tokens.size()) throw ParseError("trailing tokens", p.pos);
  return f;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

namespace {

Formula substitute_rec(const Formula& f, std::string_view var, const Term& replacement,
                       std::size_t& hits) {
  switch (f.kind()) {
    case Formula::Kind::Forall: {
      if (f.head_name() == var) return f;  // var is bound below this point
      auto body = substitute_rec(f.child(0), var, replacement, hits);
      SymbolEntry v{f.head_name(), f.head_code(), SymbolKind::Variable};
      return Formula::forall(v, std::move(body));
    }
    case Formula::Kind::Not:
      return Formula::negation(substitute_rec(f.child(0), var, replacement, hits));
    case Formula::Kind::Implies:
      return Formula::implies(substitute_rec(f.child(0), var, replacement, hits),
                              substitute_rec(f.child(1), var, replacement, hits));
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& t : f.args()) {
        if (t.kind == Term::Kind::Variable && t.name == var) {
          args.push_back(replacement);
          ++hits;
        } else {
          args.push_back(t);
        }
      }
      SymbolEntry p{f.head_name(), f.head_code(), SymbolKind::Predicate};
      return Formula::predicate(p, std::move(args));
    }
    case Formula::Kind::Atom:
      return f;
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, std::string_view var, const codec::Natural& value,
                   SymbolTable& table, bool abbreviated) {
  Numeral n = abbreviated ? make_abbreviated_numeral(value, table) : make_successor_numeral(value);
  Term replacement = Term::make_numeral(std::move(n));
  std::size_t hits = 0;
  Formula out = substitute_rec(f, var, replacement, hits);
  if (hits == 0) throw NoFreeOccurrence(std::string(var));
  return out;
}

}  // namespace mmk::fol
