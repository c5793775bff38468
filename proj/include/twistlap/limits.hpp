#pragma once

#include <complex>
#include <vector>

#include "twistlap/polynomials.hpp"
#include "twistlap/spectral.hpp"

namespace twistlap {

struct ConvergencePoint {
  Rational kappa;
  Rational exact_diff;  // max |coefficient difference|, exact
  double diff = 0.0;    // the same value in floating point
};

struct ConvergenceReport {
  long m = 0;
  long n = 0;
  Rational nu;
  std::vector<ConvergencePoint> points;
  // Least-squares slope of log(diff) against log|kappa| over the nonzero
  // differences; +infinity when every difference vanishes.
  double fitted_order = 0.0;
  // Max coefficient error of the exact polynomial extrapolation of
  // P_{m,n}^{nu;kappa} to kappa = 0 against H_{m,n}^nu.
  double extrapolated_diff = 0.0;
  bool extrapolated_match = false;
};

// Computes P_{m,n}^{nu;kappa} along a kappa sequence shrinking to 0, compares
// coefficient maps against H_{m,n}^nu, fits the convergence order, and
// extrapolates the coefficients to kappa = 0 exactly.
ConvergenceReport hermite_limit_probe(const Rational& nu, long m, long n,
                                      const std::vector<Rational>& kappa_seq);

// Pointwise |(1+kappa|z|^2)^{nu/kappa+m} - e^{nu|z|^2}|, max over the sample
// points, one entry per kappa.
std::vector<double> weight_limit_check(const Rational& nu, long m,
                                       const std::vector<Rational>& kappa_seq,
                                       const std::vector<std::complex<double>>& sample_points);

struct RouteCrosscheck {
  Rational kappa;
  Rational nu;
  struct Entry {
    long m = 0;
    long n = 0;
    bool routes_equal = false;  // ladder == rodrigues_d == rodrigues_mixed
    Rational jacobi_ratio;      // jacobi_closed / ladder, exact
  };
  std::vector<Entry> entries;
  bool all_routes_equal = false;
  bool jacobi_ratio_one_for_m_le_n = false;
};

// Exercises every (m, n) with m <= min(m_max, Landau bound) and n <= n_max
// (capped by the level spectrum on the sphere chart).
RouteCrosscheck route_crosscheck(const SurfaceMagneticParams& params, long m_max, long n_max);

// kappa = sign * 2^{-k} for k = k_lo .. k_hi.
std::vector<Rational> default_kappa_sequence(int k_lo, int k_hi, int sign);

}  // namespace twistlap
