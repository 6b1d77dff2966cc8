#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mmk/cas/expr.hpp"

namespace mmk::cas {

// Exponent vector over the atom alphabet. Compared atom-by-atom in the
// canonical order (higher exponent first), which fixes the serialized
// monomial order once and for all.
struct Monomial {
  std::array<int, kAtomCount> exp{};

  int operator[](Atom a) const { return exp[static_cast<std::size_t>(a)]; }
  int& operator[](Atom a) { return exp[static_cast<std::size_t>(a)]; }
  bool is_constant() const;
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator<(const Monomial& o) const;  // canonical order
  std::string to_string() const;
};

// Canonical expanded polynomial. After normalization the derived atoms
// (rho, drho, v, M, B, lambda, Ebar) are gone: rho -> (v+chi)/sqrt2,
// drho -> dchi/sqrt2, v -> mu/sqrtlambda, M -> v*e, B -> A - e^-1*dtheta,
// lambda -> sqrtlambda^2, E*Ebar -> 1, i^2 -> -1, sqrt2^2 -> 2.
class NormalForm {
public:
  using Terms = std::vector<std::pair<Monomial, Rational>>;

  NormalForm() = default;
  explicit NormalForm(Terms terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  bool operator==(const NormalForm& o) const { return terms_ == o.terms_; }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }

  // One monomial per line: "coeff * atom^k * ...". sqrtlambda^(2k) prints
  // as lambda^k so the output reads like the usual physics displays.
  std::string to_string() const;

private:
  Terms terms_;
};

// Expand, eliminate derived atoms, reduce powers of i / sqrt2 / E*Ebar,
// collect and sort. Idempotent by construction.
NormalForm normalize(const Expr& x);

// Same pipeline with the derived-atom substitutions switched off; used to
// inspect an expression as written (e.g. for the mass-term monomial).
NormalForm expand_raw(const Expr& x);

// Verified iff normalize(lhs - rhs) is the zero polynomial.
struct Verdict {
  bool verified;
  NormalForm residual;
};
Verdict verify_step(const Expr& lhs, const Expr& rhs);

}  // namespace mmk::cas
