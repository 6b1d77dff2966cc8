#pragma once

#include <complex>

#include "mmk/cas/expr.hpp"

namespace mmk::cas {

// Independent numeric input: the free atoms get values, the derived ones
// are computed from them the way their definitions read.
struct Assignment {
  double A = 0, dtheta = 0, dchi = 0, chi = 0, theta = 0, F = 0;
  double e = 1, mu = 1, lambda = 1;
};

struct DivisionByZero : CasError {
  DivisionByZero() : CasError("assignment requires e != 0 and lambda != 0") {}
};

// Plain complex tree evaluation; shares no code with the normalizer, which
// is the point: it is the oracle the normalizer is checked against.
std::complex<double> numeric_eval(const Expr& x, const Assignment& a);

}  // namespace mmk::cas
