#pragma once

#include <optional>

#include "twistlap/rational.hpp"

namespace twistlap {

struct ParamCheck {
  bool valid = false;
  // Highest admissible Landau level; set only for kappa < 0, where the
  // discrete spectrum is finite. Unbounded for kappa >= 0.
  std::optional<long> max_m;
};

// Validity: nu > 0, 2nu + kappa > 0 when kappa <= 0, and 2nu/kappa a positive
// integer when kappa > 0. For kappa < 0, max_m is the greatest integer
// strictly below (2nu + kappa) / (-2 kappa).
ParamCheck validate_params(const Rational& kappa, const Rational& nu);

// Curvature/coupling pair for one surface and magnetic field strength.
struct SurfaceMagneticParams {
  Rational kappa;
  Rational nu;

  // Throws RangeError when the pair is invalid.
  static SurfaceMagneticParams create(Rational kappa, Rational nu);

  Rational nu_over_kappa() const;  // kappa != 0 only
  bool level_in_range(long m) const;
};

// E_{kappa,m}^nu = nu(2m+1) + m(m+1) kappa
Rational eigenvalue(const Rational& kappa, const Rational& nu, long m);

// Bound-checked variant; throws RangeError for m beyond the Landau bound.
Rational eigenvalue(const SurfaceMagneticParams& params, long m);

}  // namespace twistlap
