#include "mmk/cas/expr.hpp"

#include <cctype>
#include <numeric>

namespace mmk::cas {

namespace {

long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > INT64_MAX || r < INT64_MIN) throw CasError("rational coefficient overflow");
  return static_cast<long long>(r);
}

long long checked_add(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > INT64_MAX || r < INT64_MIN) throw CasError("rational coefficient overflow");
  return static_cast<long long>(r);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw CasError("zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  r.num_ = checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_));
  r.den_ = checked_mul(den_, o.den_);
  r.reduce();
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  Rational r;
  r.num_ = checked_mul(num_, o.num_);
  r.den_ = checked_mul(den_, o.den_);
  r.reduce();
  return r;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw CasError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::pow(int k) const {
  Rational base = k < 0 ? reciprocal() : *this;
  int n = k < 0 ? -k : k;
  Rational acc(1);
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string_view atom_name(Atom a) {
  switch (a) {
    case Atom::F: return "F";
    case Atom::A: return "A";
    case Atom::B: return "B";
    case Atom::Dtheta: return "dtheta";
    case Atom::Dchi: return "dchi";
    case Atom::Drho: return "drho";
    case Atom::Chi: return "chi";
    case Atom::Theta: return "theta";
    case Atom::Rho: return "rho";
    case Atom::E: return "E";
    case Atom::Ebar: return "Ebar";
    case Atom::I: return "i";
    case Atom::Sqrt2: return "sqrt2";
    case Atom::Ecoup: return "e";
    case Atom::Mu: return "mu";
    case Atom::SqrtLambda: return "sqrtlambda";
    case Atom::Lambda: return "lambda";
    case Atom::Vev: return "v";
    case Atom::Mass: return "M";
  }
  return "?";
}

bool atom_allows_negative_power(Atom a) {
  return a == Atom::Ecoup || a == Atom::Mu || a == Atom::Lambda || a == Atom::SqrtLambda;
}

Expr Expr::num(Rational r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Num;
  n->number = r;
  return Expr(std::move(n));
}

Expr Expr::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = a;
  return Expr(std::move(n));
}

Expr Expr::add(std::vector<Expr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->kids = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::mul(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->kids = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->kids.push_back(std::move(base));
  return Expr(std::move(n));
}

Expr Expr::dagger_node(Expr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Dagger;
  n->kids.push_back(std::move(inner));
  return Expr(std::move(n));
}

Expr Expr::deriv_node(Expr inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Deriv;
  n->kids.push_back(std::move(inner));
  return Expr(std::move(n));
}

// ---------------------------------------------------------------------------
// dagger
// ---------------------------------------------------------------------------

Expr dagger(const Expr& x) {
  switch (x.kind()) {
    case Expr::Kind::Num:
      return x;
    case Expr::Kind::Atom:
      if (x.atom_id() == Atom::I)
        return Expr::mul({Expr::num(Rational(-1)), Expr::atom(Atom::I)});
      if (x.atom_id() == Atom::E) return Expr::atom(Atom::Ebar);
      if (x.atom_id() == Atom::Ebar) return Expr::atom(Atom::E);
      return x;
    case Expr::Kind::Add: {
      std::vector<Expr> kids;
      kids.reserve(x.kids().size());
      for (const auto& k : x.kids()) kids.push_back(dagger(k));
      return Expr::add(std::move(kids));
    }
    case Expr::Kind::Mul: {
      std::vector<Expr> kids;
      kids.reserve(x.kids().size());
      for (const auto& k : x.kids()) kids.push_back(dagger(k));
      return Expr::mul(std::move(kids));
    }
    case Expr::Kind::Pow:
      return Expr::pow(dagger(x.kids()[0]), x.exponent());
    case Expr::Kind::Dagger:
      // involution
      return x.kids()[0];
    case Expr::Kind::Deriv:
      // the formal derivative is real, so conjugation passes through
      return Expr::deriv_node(dagger(x.kids()[0]));
  }
  return x;
}

// ---------------------------------------------------------------------------
// formal derivative
// ---------------------------------------------------------------------------

Expr d_mu(const Expr& x) {
  switch (x.kind()) {
    case Expr::Kind::Num:
      return Expr::num(Rational(0));
    case Expr::Kind::Atom:
      switch (x.atom_id()) {
        case Atom::Rho: return Expr::atom(Atom::Drho);
        case Atom::Theta: return Expr::atom(Atom::Dtheta);
        case Atom::Chi: return Expr::atom(Atom::Dchi);
        case Atom::E:
          return Expr::mul({Expr::atom(Atom::I), Expr::atom(Atom::E), Expr::atom(Atom::Dtheta)});
        case Atom::Ebar:
          return Expr::mul({Expr::num(Rational(-1)), Expr::atom(Atom::I), Expr::atom(Atom::Ebar),
                            Expr::atom(Atom::Dtheta)});
        case Atom::Dtheta:
        case Atom::Dchi:
        case Atom::Drho:
          throw SecondDerivative();
        case Atom::A:
        case Atom::B:
        case Atom::F:
          throw CasError(std::string("no derivative rule for atom ") +
                         std::string(atom_name(x.atom_id())));
        default:
          // couplings, roots, vacuum value, mass: all constant
          return Expr::num(Rational(0));
      }
    case Expr::Kind::Add: {
      std::vector<Expr> kids;
      kids.reserve(x.kids().size());
      for (const auto& k : x.kids()) kids.push_back(d_mu(k));
      return Expr::add(std::move(kids));
    }
    case Expr::Kind::Mul: {
      // Leibniz
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < x.kids().size(); ++i) {
        std::vector<Expr> factors;
        for (std::size_t j = 0; j < x.kids().size(); ++j)
          factors.push_back(i == j ? d_mu(x.kids()[j]) : x.kids()[j]);
        terms.push_back(Expr::mul(std::move(factors)));
      }
      return Expr::add(std::move(terms));
    }
    case Expr::Kind::Pow: {
      int k = x.exponent();
      if (k == 0) return Expr::num(Rational(0));
      if (k < 0) {
        // negative powers live on constant couplings only
        return Expr::num(Rational(0));
      }
      return Expr::mul({Expr::num(Rational(k)), Expr::pow(x.kids()[0], k - 1), d_mu(x.kids()[0])});
    }
    case Expr::Kind::Dagger:
      return d_mu(dagger(x.kids()[0]));
    case Expr::Kind::Deriv:
      throw SecondDerivative();
  }
  return Expr::num(Rational(0));
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace {

void print_rec(const Expr& x, std::string& out, int parent_prec);

void flatten_factors(const Expr& e, std::vector<Expr>& out) {
  if (e.kind() == Expr::Kind::Mul) {
    for (const auto& k : e.kids()) flatten_factors(k, out);
  } else {
    out.push_back(e);
  }
}

// Splits a leading negative coefficient off a term so sums print as "a - b".
bool split_negative(const Expr& term, Expr& positive) {
  if (term.kind() == Expr::Kind::Num && term.number().is_negative()) {
    positive = Expr::num(-term.number());
    return true;
  }
  if (term.kind() != Expr::Kind::Mul) return false;
  std::vector<Expr> factors;
  flatten_factors(term, factors);
  if (factors.empty() || factors[0].kind() != Expr::Kind::Num ||
      !factors[0].number().is_negative())
    return false;
  Rational flipped = -factors[0].number();
  std::vector<Expr> rest(factors.begin() + 1, factors.end());
  if (!flipped.is_one() || rest.empty()) rest.insert(rest.begin(), Expr::num(flipped));
  if (rest.size() == 1 && rest[0].kind() == Expr::Kind::Add) return false;  // keep structure
  positive = rest.size() == 1 ? rest[0] : Expr::mul(std::move(rest));
  return true;
}

// precedence: Add(1) < Mul(2) < Pow/unary(3)
void print_rec(const Expr& x, std::string& out, int parent_prec) {
  switch (x.kind()) {
    case Expr::Kind::Num: {
      bool needs = x.number().is_negative() && parent_prec >= 2;
      if (needs) out += "(";
      out += x.number().to_string();
      if (needs) out += ")";
      return;
    }
    case Expr::Kind::Atom:
      out += atom_name(x.atom_id());
      return;
    case Expr::Kind::Add: {
      bool needs = parent_prec >= 2;
      if (needs) out += "(";
      // flatten nested sums so the sign handling sees every term
      std::vector<Expr> terms;
      auto flatten = [&terms](auto&& self, const Expr& e) -> void {
        if (e.kind() == Expr::Kind::Add) {
          for (const auto& k : e.kids()) self(self, k);
        } else {
          terms.push_back(e);
        }
      };
      flatten(flatten, x);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        Expr positive;
        bool negative = split_negative(terms[i], positive);
        if (i == 0) {
          if (negative) out += "-";
        } else {
          out += negative ? " - " : " + ";
        }
        print_rec(negative ? positive : terms[i], out, 1);
      }
      if (needs) out += ")";
      return;
    }
    case Expr::Kind::Mul: {
      bool needs = parent_prec >= 3;
      if (needs) out += "(";
      std::vector<Expr> factors;
      flatten_factors(x, factors);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        print_rec(factors[i], out, 2);
      }
      if (needs) out += ")";
      return;
    }
    case Expr::Kind::Pow: {
      bool needs = parent_prec >= 4;  // a^b^c would not re-parse
      if (needs) out += "(";
      print_rec(x.kids()[0], out, 4);
      out += "^";
      out += std::to_string(x.exponent());
      if (needs) out += ")";
      return;
    }
    case Expr::Kind::Dagger:
      out += "dagger(";
      print_rec(x.kids()[0], out, 0);
      out += ")";
      return;
    case Expr::Kind::Deriv:
      out += "d(";
      print_rec(x.kids()[0], out, 0);
      out += ")";
      return;
  }
}

}  // namespace

std::string Expr::print() const {
  std::string out;
  print_rec(*this, out, 0);
  return out;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

struct ExprLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
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
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ExprParseError("expected integer", start);
    return std::stoll(std::string(text.substr(start, pos - start)));
  }
};

struct ExprParser {
  ExprLexer lex;

  Expr expression() {
    std::vector<Expr> terms;
    bool negate = lex.consume('-');
    terms.push_back(maybe_negate(term(), negate));
    for (;;) {
      if (lex.consume('+')) {
        terms.push_back(term());
      } else if (lex.consume('-')) {
        terms.push_back(maybe_negate(term(), true));
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms[0] : Expr::add(std::move(terms));
  }

  static Expr maybe_negate(Expr e, bool negate) {
    if (!negate) return e;
    if (e.kind() == Expr::Kind::Num) return Expr::num(-e.number());
    return Expr::mul({Expr::num(Rational(-1)), std::move(e)});
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(power());
    while (lex.consume('*')) factors.push_back(power());
    return factors.size() == 1 ? factors[0] : Expr::mul(std::move(factors));
  }

  Expr power() {
    Expr base = primary();
    if (!lex.consume('^')) return base;
    bool paren = lex.consume('(');
    bool neg = lex.consume('-');
    std::size_t at = lex.pos;
    long long k = lex.integer();
    if (paren) {
      if (lex.peek() == '/') throw ExprParseError("integer exponent expected", lex.pos);
      if (!lex.consume(')')) throw ExprParseError("expected ')'", lex.pos);
    }
    if (lex.peek() == '/') throw ExprParseError("integer exponent expected", lex.pos);
    if (k > 64) throw ExprParseError("exponent too large", at);
    int expo = static_cast<int>(neg ? -k : k);
    if (expo < 0) {
      if (base.kind() != Expr::Kind::Atom || !atom_allows_negative_power(base.atom_id()))
        throw ExprParseError("negative exponent allowed on couplings only", at);
    }
    return Expr::pow(std::move(base), expo);
  }

  Expr primary() {
    char c = lex.peek();
    if (c == '(') {
      lex.consume('(');
      Expr e = expression();
      if (!lex.consume(')')) throw ExprParseError("expected ')'", lex.pos);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = lex.integer();
      if (lex.consume('/')) {
        long long den = lex.integer();
        return Expr::num(Rational(num, den));
      }
      return Expr::num(Rational(num));
    }
    std::size_t at = lex.pos;
    std::string name = lex.ident();
    if (name.empty()) throw ExprParseError("expected expression", at);
    if (name == "dagger" || name == "d") {
      if (!lex.consume('(')) throw ExprParseError("expected '(' after " + name, lex.pos);
      Expr inner = expression();
      if (!lex.consume(')')) throw ExprParseError("expected ')'", lex.pos);
      return name == "dagger" ? Expr::dagger_node(std::move(inner))
                              : Expr::deriv_node(std::move(inner));
    }
    if (name == "phi") return Expr::mul({Expr::atom(Atom::Rho), Expr::atom(Atom::E)});
    for (std::size_t a = 0; a < kAtomCount; ++a) {
      if (atom_name(static_cast<Atom>(a)) == name) return Expr::atom(static_cast<Atom>(a));
    }
    throw ExprParseError("unknown identifier '" + name + "'", at);
  }
};

}  // namespace

Expr parse_expr(std::string_view text) {
  ExprParser p{ExprLexer{text}};
  Expr e = p.expression();
  p.lex.skip_ws();
  if (p.lex.pos != text.size()) throw ExprParseError("trailing input", p.lex.pos);
  return e;
}

}  // namespace mmk::cas
