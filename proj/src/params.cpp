#include "twistlap/params.hpp"

#include <utility>

#include "twistlap/errors.hpp"

namespace twistlap {

ParamCheck validate_params(const Rational& kappa, const Rational& nu) {
  ParamCheck out;
  if (nu.sign() <= 0) return out;
  if (kappa.sign() <= 0) {
    const Rational margin = Rational(2) * nu + kappa;
    if (margin.sign() <= 0) return out;
    out.valid = true;
    if (kappa.sign() < 0) {
      // 0 <= m < (2nu + kappa)/(|kappa| - kappa) with |kappa| - kappa = -2 kappa.
      const Rational bound = margin / (Rational(-2) * kappa);
      const mpz_class f = bound.floor_strict();
      if (!f.fits_slong_p()) throw Error("level bound overflows long");
      out.max_m = f.get_si();
    }
    return out;
  }
  const Rational flux = Rational(2) * nu / kappa;
  out.valid = flux.is_integer() && flux.sign() > 0;
  return out;
}

SurfaceMagneticParams SurfaceMagneticParams::create(Rational kappa, Rational nu) {
  const ParamCheck check = validate_params(kappa, nu);
  if (!check.valid)
    throw RangeError("invalid parameters kappa=" + kappa.to_string() +
                     ", nu=" + nu.to_string());
  return SurfaceMagneticParams{std::move(kappa), std::move(nu)};
}

Rational SurfaceMagneticParams::nu_over_kappa() const {
  if (kappa.is_zero()) throw DomainMismatchError("nu/kappa undefined at kappa = 0");
  return nu / kappa;
}

bool SurfaceMagneticParams::level_in_range(long m) const {
  if (m < 0) return false;
  const ParamCheck check = validate_params(kappa, nu);
  return !check.max_m || m <= *check.max_m;
}

Rational eigenvalue(const Rational& kappa, const Rational& nu, long m) {
  return nu * Rational(2 * m + 1) + Rational(m) * Rational(m + 1) * kappa;
}

Rational eigenvalue(const SurfaceMagneticParams& params, long m) {
  if (!params.level_in_range(m))
    throw RangeError("level m=" + std::to_string(m) + " beyond the Landau bound");
  return eigenvalue(params.kappa, params.nu, m);
}

}  // namespace twistlap
