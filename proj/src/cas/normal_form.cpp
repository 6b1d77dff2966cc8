#include "mmk/cas/normal_form.hpp"

#include <algorithm>

namespace mmk::cas {

bool Monomial::is_constant() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

bool Monomial::operator<(const Monomial& o) const {
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    if (exp[i] != o.exp[i]) return exp[i] > o.exp[i];  // higher power first
  }
  return false;
}

std::string Monomial::to_string() const {
  std::string out;
  auto append = [&out](std::string_view name, int k) {
    if (k == 0) return;
    out += " * ";
    out += name;
    if (k != 1) {
      out += "^";
      out += std::to_string(k);
    }
  };
  for (std::size_t i = 0; i < kAtomCount; ++i) {
    Atom a = static_cast<Atom>(i);
    int k = exp[i];
    if (k == 0) continue;
    if (a == Atom::SqrtLambda) {
      // print pairs of sqrtlambda as lambda
      int whole = k >= 0 ? k / 2 : -((-k) / 2);
      int rem = k - 2 * whole;
      if (rem < 0) {  // e.g. -1 = 2*(-1) + 1
        whole -= 1;
        rem += 2;
      }
      append(atom_name(Atom::Lambda), whole);
      append(atom_name(Atom::SqrtLambda), rem);
      continue;
    }
    if (a == Atom::E && k < 0) {
      append(atom_name(Atom::Ebar), -k);
      continue;
    }
    append(atom_name(a), k);
  }
  return out;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    if (!out.empty()) out += "\n";
    out += coeff.to_string();
    out += mono.to_string();
  }
  return out;
}

namespace {

using Poly = std::map<Monomial, Rational>;

void add_term(Poly& p, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) add_term(out, m, c);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (std::size_t i = 0; i < kAtomCount; ++i) m.exp[i] += mb.exp[i];
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

Poly poly_const(const Rational& c) {
  Poly out;
  add_term(out, Monomial{}, c);
  return out;
}

Poly poly_atom(Atom a, int k = 1) {
  Monomial m;
  m[a] = k;
  Poly out;
  add_term(out, m, Rational(1));
  return out;
}

Poly poly_pow(const Poly& base, int k) {
  if (k == 0) return poly_const(Rational(1));
  if (k < 0) {
    // invertible only when base is a single monomial over invertible atoms
    if (base.size() != 1) throw CasError("negative power of a non-monomial expression");
    const auto& [m, c] = *base.begin();
    Monomial total;
    for (std::size_t i = 0; i < kAtomCount; ++i) {
      Atom a = static_cast<Atom>(i);
      if (m.exp[i] != 0 && !atom_allows_negative_power(a) && a != Atom::Sqrt2)
        throw CasError("negative power allowed on couplings only");
      total.exp[i] = m.exp[i] * k;
    }
    Poly out;
    add_term(out, total, c.pow(k));
    return out;
  }
  Poly acc = poly_const(Rational(1));
  Poly b = base;
  int n = k;
  while (n) {
    if (n & 1) acc = poly_mul(acc, b);
    n >>= 1;
    if (n) b = poly_mul(b, b);
  }
  return acc;
}

Poly expand_expr(const Expr& x) {
  switch (x.kind()) {
    case Expr::Kind::Num:
      return poly_const(x.number());
    case Expr::Kind::Atom:
      return poly_atom(x.atom_id());
    case Expr::Kind::Add: {
      Poly out;
      for (const auto& k : x.kids()) out = poly_add(out, expand_expr(k));
      return out;
    }
    case Expr::Kind::Mul: {
      Poly out = poly_const(Rational(1));
      for (const auto& k : x.kids()) out = poly_mul(out, expand_expr(k));
      return out;
    }
    case Expr::Kind::Pow:
      return poly_pow(expand_expr(x.kids()[0]), x.exponent());
    case Expr::Kind::Dagger:
      return expand_expr(dagger(x.kids()[0]));
    case Expr::Kind::Deriv:
      return expand_expr(d_mu(x.kids()[0]));
  }
  return {};
}

// substitution polynomials for the derived atoms
Poly substitution_for(Atom a) {
  switch (a) {
    case Atom::Rho: {
      // (v + chi) / sqrt2
      Poly sum = poly_add(poly_atom(Atom::Vev), poly_atom(Atom::Chi));
      return poly_mul(sum, poly_atom(Atom::Sqrt2, -1));
    }
    case Atom::Drho:
      return poly_mul(poly_atom(Atom::Dchi), poly_atom(Atom::Sqrt2, -1));
    case Atom::Vev:
      return poly_mul(poly_atom(Atom::Mu), poly_atom(Atom::SqrtLambda, -1));
    case Atom::Mass:
      return poly_mul(poly_atom(Atom::Vev), poly_atom(Atom::Ecoup));
    case Atom::B: {
      Poly shift;
      Monomial m;
      m[Atom::Ecoup] = -1;
      m[Atom::Dtheta] = 1;
      add_term(shift, m, Rational(-1));
      return poly_add(poly_atom(Atom::A), shift);
    }
    case Atom::Lambda:
      return poly_atom(Atom::SqrtLambda, 2);
    default:
      throw CasError("no substitution for atom");
  }
}

bool is_derived(Atom a) {
  return a == Atom::Rho || a == Atom::Drho || a == Atom::Vev || a == Atom::Mass ||
         a == Atom::B || a == Atom::Lambda;
}

// Replaces derived atoms until none remain. Each substitution only
// introduces atoms strictly earlier in the dependency order, so the loop
// terminates.
Poly eliminate_derived(Poly p) {
  for (;;) {
    Atom found = Atom::F;
    bool any = false;
    for (const auto& [m, c] : p) {
      for (std::size_t i = 0; i < kAtomCount && !any; ++i) {
        if (m.exp[i] != 0 && is_derived(static_cast<Atom>(i))) {
          found = static_cast<Atom>(i);
          any = true;
        }
      }
      if (any) break;
    }
    if (!any) return p;
    Poly subst = substitution_for(found);
    Poly out;
    for (const auto& [m, c] : p) {
      int k = m[found];
      if (k == 0) {
        add_term(out, m, c);
        continue;
      }
      Monomial rest = m;
      rest[found] = 0;
      Poly replaced = poly_pow(subst, k);
      Poly base;
      add_term(base, rest, c);
      for (const auto& [mm, cc] : poly_mul(base, replaced)) add_term(out, mm, cc);
    }
    p = std::move(out);
  }
}

// i^2 -> -1, sqrt2^2 -> 2, E*Ebar -> 1 (netted into a signed E exponent)
Poly reduce_powers(const Poly& p) {
  Poly out;
  for (const auto& [m0, c0] : p) {
    Monomial m = m0;
    Rational c = c0;
    // imaginary unit: fold i^2 = -1, keep exponent in {0, 1}
    int ei = m[Atom::I];
    int r = ((ei % 4) + 4) % 4;
    if (r == 2 || r == 3) c = c * Rational(-1);
    m[Atom::I] = (r == 1 || r == 3) ? 1 : 0;
    // sqrt2: fold pairs into the coefficient
    int es = m[Atom::Sqrt2];
    int whole = es >= 0 ? es / 2 : -(((-es) + 1) / 2);
    int rem = es - 2 * whole;  // 0 or 1
    c = c * Rational(2).pow(whole);
    m[Atom::Sqrt2] = rem;
    // unit phases: net exponent on E (negative means Ebar)
    int net = m[Atom::E] - m[Atom::Ebar];
    m[Atom::E] = net;
    m[Atom::Ebar] = 0;
    add_term(out, m, c);
  }
  return out;
}

NormalForm sorted_form(const Poly& p) {
  NormalForm::Terms terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return NormalForm(std::move(terms));
}

}  // namespace

NormalForm normalize(const Expr& x) {
  return sorted_form(reduce_powers(eliminate_derived(expand_expr(x))));
}

NormalForm expand_raw(const Expr& x) {
  return sorted_form(reduce_powers(expand_expr(x)));
}

Verdict verify_step(const Expr& lhs, const Expr& rhs) {
  NormalForm residual = normalize(lhs - rhs);
  return Verdict{residual.is_zero(), std::move(residual)};
}

}  // namespace mmk::cas
