#pragma once

#include "twistlap/bipoly.hpp"

namespace twistlap {

struct JacobiParams {
  long degree = 0;
  Rational a;
  Rational b;
};

// Jacobi polynomial P_l^{(a,b)} for arbitrary rational parameters, defined by
// the explicit binomial sum
//   sum_k C(l+a, l-k) C(l+b, k) ((x-1)/2)^k ((x+1)/2)^{l-k}
// with generalized binomials; agrees with the classical family on a, b > -1
// and stays polynomial in a and b.
UniPoly jacobi_poly(long l, const Rational& a, const Rational& b);
UniPoly jacobi_poly(const JacobiParams& p);

// (x^2-1) P_j' + [(a-b) + (a+b)x] P_j = 2(j+1) P_{j+1}^{(a-1,b-1)}, exactly.
bool jacobi_contiguous_check(long j, const Rational& a, const Rational& b);

// d/dx P_{j+1}^{(a-1,b-1)} = (j+a+b)/2 P_j^{(a,b)}, exactly.
bool jacobi_derivative_check(long j, const Rational& a, const Rational& b);

struct JacobiOdeResiduals {
  // Residual with the leading term (1-x^2) y'' and first-order coefficient
  // (alpha-beta) + (alpha+beta+2)x, as printed; not identically zero.
  UniPoly printed;
  // Residual with the leading term corrected to (x^2-1) y''; identically zero.
  UniPoly corrected;
};

JacobiOdeResiduals jacobi_ode_residuals(long l, const Rational& alpha, const Rational& beta);

}  // namespace twistlap
