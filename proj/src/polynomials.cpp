#include "twistlap/polynomials.hpp"

#include <string>

#include "twistlap/errors.hpp"
#include "twistlap/jacobi.hpp"
#include "twistlap/operators.hpp"

namespace twistlap {

namespace {

void check_level(const SurfaceMagneticParams& params, long m, Bounds bounds) {
  if (m < 0) throw RangeError("negative level index");
  if (bounds == Bounds::checked && !params.level_in_range(m))
    throw RangeError("level m=" + std::to_string(m) + " beyond the Landau bound");
}

void check_indices(long m, long n) {
  if (m < 0 || n < 0) throw RangeError("negative polynomial index");
}

// Extracts the polynomial from a weighted function whose weight must have
// cancelled. Checked mode demands exponent exactly 0; formal mode accepts a
// leftover nonnegative integer exponent and multiplies it back in (beyond the
// Landau bound the construction may pick up explicit weight-base factors).
BiPoly strip_cancelled_weight(const WeightedFn& f, Bounds bounds) {
  if (f.is_zero()) return BiPoly();
  const Rational& s = f.power_weight().s;
  if (s.is_zero()) return f.poly();
  if (bounds == Bounds::formal && s.is_integer() && s.sign() > 0) {
    BiPoly p = f.poly();
    const BiPoly base = weight_base(f.power_weight().kappa);
    for (long i = 0; i < s.to_long(); ++i) p = p * base;
    return p;
  }
  throw InternalConsistencyError("weight failed to cancel (leftover exponent " +
                                 s.to_string() + ")");
}

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::ladder: return "ladder";
    case Route::rodrigues_d: return "rodrigues_d";
    case Route::rodrigues_mixed: return "rodrigues_mixed";
    case Route::jacobi_closed: return "jacobi_closed";
  }
  return "?";
}

BiPoly complex_hermite(long m, long n, const Rational& nu) {
  check_indices(m, n);
  if (nu.sign() <= 0) throw RangeError("complex_hermite requires nu > 0");
  const Rational two_nu = Rational(2) * nu;
  WeightedFn f = WeightedFn::exponential(-two_nu, BiPoly::constant(Rational(1)));
  for (long j = 0; j < n; ++j) f = f.derivative(Var::zbar);
  for (long i = 0; i < m; ++i) f = f.derivative(Var::z);
  const Rational sign((m + n) % 2 == 0 ? 1 : -1);
  return f.poly().scaled(sign / two_nu.pow(n));
}

Rational rodrigues_constant(const SurfaceMagneticParams& params, long m, long n) {
  check_indices(m, n);
  const Rational t = params.nu_over_kappa();
  const Rational A = Rational(2) * (t + Rational(m)) - Rational(m) + Rational(1);
  const Rational tail = pochhammer(A - Rational(n), n);
  if (tail.is_zero())
    throw DegenerateConstantError("degenerate Gamma ratio at m=" + std::to_string(m) +
                                  ", n=" + std::to_string(n));
  const Rational sign((m + n) % 2 == 0 ? 1 : -1);
  return sign / (params.kappa.pow(n) * tail);
}

BiPoly poly_via_ladder(const SurfaceMagneticParams& params, long m, long n, Bounds bounds) {
  check_indices(m, n);
  check_level(params, m, bounds);
  const Rational t = params.nu_over_kappa();
  const Rational tm = t + Rational(m);
  const WeightedFn seed =
      WeightedFn::power(params.kappa, -tm, BiPoly::monomial(static_cast<int>(n), 0, Rational(1)));
  const WeightedFn chained = ladder_chain(params, m, seed);
  if (chained.is_zero()) return BiPoly();
  return strip_cancelled_weight(chained.shifted(tm), bounds);
}

BiPoly poly_via_d(const SurfaceMagneticParams& params, long m, long n, Bounds bounds) {
  check_indices(m, n);
  check_level(params, m, bounds);
  const Rational t = params.nu_over_kappa();
  const Rational two_tm = Rational(2) * (t + Rational(m));
  WeightedFn f = WeightedFn::power(params.kappa, -two_tm,
                                   BiPoly::monomial(static_cast<int>(n), 0, Rational(1)));
  f = d_power(m, f, params.kappa);
  f = f.shifted(Rational(2) * t + Rational(m)).scaled(Rational(m % 2 == 0 ? 1 : -1));
  if (f.is_zero()) return BiPoly();
  return strip_cancelled_weight(f, bounds);
}

BiPoly poly_via_mixed_rodrigues(const SurfaceMagneticParams& params, long m, long n,
                                Bounds bounds) {
  check_indices(m, n);
  check_level(params, m, bounds);
  const Rational c = rodrigues_constant(params, m, n);
  const Rational t = params.nu_over_kappa();
  const Rational two_tm = Rational(2) * (t + Rational(m));
  WeightedFn f = WeightedFn::power(params.kappa, -two_tm + Rational(m + n) - Rational(1),
                                   BiPoly::constant(Rational(1)));
  for (long j = 0; j < n; ++j) f = f.derivative(Var::zbar);
  for (long i = 0; i < m; ++i) f = f.derivative(Var::z);
  f = f.shifted(two_tm + Rational(1)).scaled(c);
  if (f.is_zero()) return BiPoly();
  return strip_cancelled_weight(f, bounds);
}

BiPoly poly_via_jacobi(const SurfaceMagneticParams& params, long m, long n, Bounds bounds) {
  check_indices(m, n);
  check_level(params, m, bounds);
  const Rational t = params.nu_over_kappa();
  const Rational b = Rational(-2) * (t + Rational(m)) - Rational(1);
  const long low = std::min(m, n);
  const long gap = m >= n ? m - n : n - m;
  const UniPoly radial = jacobi_poly(low, Rational(gap), b);
  BiPoly arg = BiPoly::constant(Rational(1));
  arg.add_term({1, 1}, Rational(2) * params.kappa);
  BiPoly out = radial.eval_at(arg);
  const BiPoly prefactor = m <= n ? BiPoly::monomial(static_cast<int>(gap), 0, Rational(1))
                                  : BiPoly::monomial(0, static_cast<int>(gap), Rational(1));
  out = out * prefactor;
  const Rational sign(m % 2 == 0 ? 1 : -1);
  return out.scaled(sign * factorial(low));
}

BiPoly poly_by_route(const SurfaceMagneticParams& params, long m, long n, Route route,
                     Bounds bounds) {
  switch (route) {
    case Route::ladder: return poly_via_ladder(params, m, n, bounds);
    case Route::rodrigues_d: return poly_via_d(params, m, n, bounds);
    case Route::rodrigues_mixed: return poly_via_mixed_rodrigues(params, m, n, bounds);
    case Route::jacobi_closed: return poly_via_jacobi(params, m, n, bounds);
  }
  throw Error("unknown route");
}

BiPoly disc_polynomial(long m, long n, const Rational& nu) {
  const SurfaceMagneticParams params = SurfaceMagneticParams::create(Rational(-1), nu);
  return poly_via_ladder(params, m, n);
}

}  // namespace twistlap
