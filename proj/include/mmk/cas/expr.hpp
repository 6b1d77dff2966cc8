#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmk::cas {

struct CasError : std::runtime_error {
  explicit CasError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SecondDerivative : CasError {
  SecondDerivative() : CasError("derivative applied under another derivative") {}
};

// Exact rational coefficient. Magnitudes in this domain stay tiny; overflow
// of the 64-bit representation is checked and reported rather than wrapped.
class Rational {
public:
  Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const;
  Rational reciprocal() const;
  Rational pow(int k) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  long long num_ = 0;
  long long den_ = 1;
  void reduce();
};

// The closed atom alphabet. Order here is the canonical monomial order used
// by the normalizer (and so by every serialized normal form).
enum class Atom : std::uint8_t {
  F,           // gauge kinetic scalar, carried opaquely
  A,           // gauge field
  B,           // shifted gauge field, A - (1/e) dtheta
  Dtheta,      // formal derivative of theta
  Dchi,        // formal derivative of chi
  Drho,        // formal derivative of rho
  Chi,         // radial fluctuation field
  Theta,       // phase field
  Rho,         // radial field
  E,           // unit phase exp(+i theta)
  Ebar,        // unit phase exp(-i theta)
  I,           // imaginary unit
  Sqrt2,
  Ecoup,       // gauge coupling e
  Mu,
  SqrtLambda,
  Lambda,
  Vev,         // vacuum value v = mu / sqrt(lambda)
  Mass,        // M = v e
};
inline constexpr std::size_t kAtomCount = 19;

std::string_view atom_name(Atom a);
bool atom_allows_negative_power(Atom a);  // couplings e, mu, lambda, sqrtlambda

// Immutable expression tree: rationals, atoms, n-ary sums and products,
// integer powers, and the two formal operators (dagger, derivative) kept as
// nodes until expanded.
class Expr {
public:
  enum class Kind { Num, Atom, Add, Mul, Pow, Dagger, Deriv };

  Expr() : Expr(num(Rational(0))) {}
  static Expr num(Rational r);
  static Expr atom(Atom a);
  static Expr add(std::vector<Expr> terms);
  static Expr mul(std::vector<Expr> factors);
  static Expr pow(Expr base, int exponent);
  static Expr dagger_node(Expr inner);
  static Expr deriv_node(Expr inner);

  Kind kind() const { return node_->kind; }
  const Rational& number() const { return node_->number; }
  Atom atom_id() const { return node_->atom; }
  int exponent() const { return node_->exponent; }
  const std::vector<Expr>& kids() const { return node_->kids; }

  std::string print() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) {
    return add({a, mul({num(Rational(-1)), b})});
  }
  friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
  friend Expr operator-(const Expr& a) { return mul({num(Rational(-1)), a}); }

private:
  struct Node {
    Kind kind;
    Rational number;
    Atom atom = Atom::F;
    int exponent = 0;
    std::vector<Expr> kids;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Conjugation: i -> -i, E <-> Ebar, everything else is real. Distributes
// through sums, products and powers; commutes with the formal derivative.
Expr dagger(const Expr& x);

// Formal derivative: linear, Leibniz on products, d(E) = i E dtheta,
// d(Ebar) = -i Ebar dtheta, d(rho/theta/chi) are the d-atoms, constants and
// the vacuum value go to zero. Throws SecondDerivative on nested d-atoms.
Expr d_mu(const Expr& x);

// Expression grammar: identifiers from the atom alphabet plus `phi`
// (sugar for rho*E), rational literals like 3 or 1/4, operators + - * ^,
// functions dagger(...) and d(...). Negative exponents only on couplings.
Expr parse_expr(std::string_view text);

struct ExprParseError : CasError {
  std::size_t position;
  ExprParseError(const std::string& msg, std::size_t pos)
      : CasError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace mmk::cas
