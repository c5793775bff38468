#pragma once

#include "twistlap/bipoly.hpp"
#include "twistlap/params.hpp"

namespace twistlap {

// The four independent constructions of P_{m,n}.
enum class Route { ladder, rodrigues_d, rodrigues_mixed, jacobi_closed };
const char* route_name(Route r);

// Bound policy: `checked` enforces the Landau bound on m (the library's
// public contract); `formal` applies the construction as written beyond the
// discrete spectrum, which the boundary suites need.
enum class Bounds { checked, formal };

// H_{m,n}^nu = (-1)^{m+n} / (2nu)^n e^{2nu|z|^2} d^{m+n}/dz^m dzbar^n e^{-2nu|z|^2}
BiPoly complex_hermite(long m, long n, const Rational& nu);

// C_{kappa,nu}^{m,n} as the exact Pochhammer ratio
// (-1)^{m+n} / (kappa^n (A-n)_n) with A = 2(nu/kappa + m) - m + 1.
// Throws DegenerateConstantError when the Pochhammer factor vanishes.
Rational rodrigues_constant(const SurfaceMagneticParams& params, long m, long n);

// Normative route: (1+kappa|z|^2)^{nu/kappa+m} applied to the ladder chain of
// the level generator. The weight must cancel exactly.
BiPoly poly_via_ladder(const SurfaceMagneticParams& params, long m, long n,
                       Bounds bounds = Bounds::checked);

// (-1)^m (1+kappa|z|^2)^{2nu/kappa+m} D^m ((1+kappa|z|^2)^{-2(nu/kappa+m)} z^n)
BiPoly poly_via_d(const SurfaceMagneticParams& params, long m, long n,
                  Bounds bounds = Bounds::checked);

// C * (1+kappa|z|^2)^{2(nu/kappa+m)+1} d^{m+n}/dz^m dzbar^n
//       (1+kappa|z|^2)^{-2(nu/kappa+m)+m+n-1}
BiPoly poly_via_mixed_rodrigues(const SurfaceMagneticParams& params, long m, long n,
                                Bounds bounds = Bounds::checked);

// Branch closed form: (-1)^m m! z^{n-m} P_m^{(n-m, -2(nu/kappa+m)-1)}(1+2kappa|z|^2)
// for m <= n, and with the roles of the indices swapped (zbar^{m-n}, degree n)
// for m >= n. Agrees with the ladder exactly for m <= n and up to a nonzero
// rational constant otherwise.
BiPoly poly_via_jacobi(const SurfaceMagneticParams& params, long m, long n,
                       Bounds bounds = Bounds::checked);

BiPoly poly_by_route(const SurfaceMagneticParams& params, long m, long n, Route route,
                     Bounds bounds = Bounds::checked);

// The kappa = -1 specialization (disc polynomials), cross-checked against the
// branch closed form by the tests.
BiPoly disc_polynomial(long m, long n, const Rational& nu);

}  // namespace twistlap
