#include "mmk/cas/numeric.hpp"

#include <cmath>

namespace mmk::cas {

namespace {

using C = std::complex<double>;

C atom_value(Atom a, const Assignment& s) {
  switch (a) {
    case Atom::F: return C(s.F);
    case Atom::A: return C(s.A);
    case Atom::Dtheta: return C(s.dtheta);
    case Atom::Dchi: return C(s.dchi);
    case Atom::Chi: return C(s.chi);
    case Atom::Theta: return C(s.theta);
    case Atom::Ecoup: return C(s.e);
    case Atom::Mu: return C(s.mu);
    case Atom::Lambda: return C(s.lambda);
    case Atom::Sqrt2: return C(std::sqrt(2.0));
    case Atom::SqrtLambda: return C(std::sqrt(s.lambda));
    case Atom::I: return C(0.0, 1.0);
    case Atom::E: return std::exp(C(0.0, s.theta));
    case Atom::Ebar: return std::exp(C(0.0, -s.theta));
    case Atom::Vev: return C(s.mu / std::sqrt(s.lambda));
    case Atom::Rho: return C((s.mu / std::sqrt(s.lambda) + s.chi) / std::sqrt(2.0));
    case Atom::Drho: return C(s.dchi / std::sqrt(2.0));
    case Atom::B: return C(s.A - s.dtheta / s.e);
    case Atom::Mass: return C(s.mu / std::sqrt(s.lambda) * s.e);
  }
  return C(0.0);
}

}  // namespace

std::complex<double> numeric_eval(const Expr& x, const Assignment& a) {
  if (a.e == 0.0 || a.lambda == 0.0) throw DivisionByZero();
  switch (x.kind()) {
    case Expr::Kind::Num:
      return C(static_cast<double>(x.number().num()) / static_cast<double>(x.number().den()));
    case Expr::Kind::Atom:
      return atom_value(x.atom_id(), a);
    case Expr::Kind::Add: {
      C sum(0.0);
      for (const auto& k : x.kids()) sum += numeric_eval(k, a);
      return sum;
    }
    case Expr::Kind::Mul: {
      C prod(1.0);
      for (const auto& k : x.kids()) prod *= numeric_eval(k, a);
      return prod;
    }
    case Expr::Kind::Pow: {
      C base = numeric_eval(x.kids()[0], a);
      return std::pow(base, x.exponent());
    }
    case Expr::Kind::Dagger:
      return std::conj(numeric_eval(x.kids()[0], a));
    case Expr::Kind::Deriv:
      // the formal operator has no pointwise value; evaluate its expansion
      return numeric_eval(d_mu(x.kids()[0]), a);
  }
  return C(0.0);
}

}  // namespace mmk::cas
