#include "twistlap/jacobi.hpp"

#include "twistlap/errors.hpp"

namespace twistlap {

UniPoly jacobi_poly(long l, const Rational& a, const Rational& b) {
  if (l < 0) throw RangeError("jacobi_poly with negative degree");
  const UniPoly half_minus({Rational(-1, 2), Rational(1, 2)});  // (x-1)/2
  const UniPoly half_plus({Rational(1, 2), Rational(1, 2)});    // (x+1)/2
  std::vector<UniPoly> pm(static_cast<std::size_t>(l) + 1);
  std::vector<UniPoly> pp(static_cast<std::size_t>(l) + 1);
  pm[0] = UniPoly::constant(Rational(1));
  pp[0] = UniPoly::constant(Rational(1));
  for (long k = 1; k <= l; ++k) {
    pm[static_cast<std::size_t>(k)] = pm[static_cast<std::size_t>(k - 1)] * half_minus;
    pp[static_cast<std::size_t>(k)] = pp[static_cast<std::size_t>(k - 1)] * half_plus;
  }
  UniPoly sum;
  for (long k = 0; k <= l; ++k) {
    const Rational c = generalized_binomial(Rational(l) + a, l - k) *
                       generalized_binomial(Rational(l) + b, k);
    sum = sum + (pm[static_cast<std::size_t>(k)] * pp[static_cast<std::size_t>(l - k)]).scaled(c);
  }
  return sum;
}

UniPoly jacobi_poly(const JacobiParams& p) { return jacobi_poly(p.degree, p.a, p.b); }

bool jacobi_contiguous_check(long j, const Rational& a, const Rational& b) {
  const UniPoly pj = jacobi_poly(j, a, b);
  const UniPoly x2m1({Rational(-1), Rational(0), Rational(1)});
  const UniPoly linear({a - b, a + b});
  const UniPoly lhs = x2m1 * pj.derivative() + linear * pj;
  const UniPoly rhs =
      jacobi_poly(j + 1, a - Rational(1), b - Rational(1)).scaled(Rational(2 * (j + 1)));
  return lhs == rhs;
}

bool jacobi_derivative_check(long j, const Rational& a, const Rational& b) {
  const UniPoly lhs = jacobi_poly(j + 1, a - Rational(1), b - Rational(1)).derivative();
  const UniPoly rhs = jacobi_poly(j, a, b).scaled((Rational(j) + a + b) / Rational(2));
  return lhs == rhs;
}

JacobiOdeResiduals jacobi_ode_residuals(long l, const Rational& alpha, const Rational& beta) {
  const UniPoly y = jacobi_poly(l, alpha, beta);
  const UniPoly y1 = y.derivative();
  const UniPoly y2 = y1.derivative();
  const UniPoly one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const UniPoly first({alpha - beta, alpha + beta + Rational(2)});
  const Rational ev = Rational(l) * (Rational(l) + alpha + beta + Rational(1));
  const UniPoly common = first * y1 - y.scaled(ev);
  JacobiOdeResiduals out;
  out.printed = one_minus_x2 * y2 + common;
  out.corrected = (-one_minus_x2) * y2 + common;
  return out;
}

}  // namespace twistlap
