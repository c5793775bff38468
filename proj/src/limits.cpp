#include "twistlap/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "twistlap/errors.hpp"

namespace twistlap {

namespace {

Rational max_abs_diff(const BiPoly& a, const BiPoly& b) {
  return (a - b).max_abs_coeff();
}

double fit_order(const std::vector<ConvergencePoint>& points) {
  std::vector<double> xs, ys;
  for (const auto& pt : points) {
    if (pt.exact_diff.is_zero()) continue;
    xs.push_back(std::log(pt.kappa.abs().to_double()));
    ys.push_back(std::log(pt.exact_diff.to_double()));
  }
  if (xs.size() < 2) return std::numeric_limits<double>::infinity();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

// Diffs must be non-increasing, and strictly decreasing while nonzero.
bool monotone_decreasing(const std::vector<ConvergencePoint>& points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Rational& prev = points[i - 1].exact_diff;
    const Rational& cur = points[i].exact_diff;
    if (cur > prev) return false;
    if (prev.sign() > 0 && cur == prev) return false;
  }
  return true;
}

}  // namespace

ConvergenceReport hermite_limit_probe(const Rational& nu, long m, long n,
                                      const std::vector<Rational>& kappa_seq) {
  if (kappa_seq.size() < 2) throw RangeError("kappa sequence needs at least two points");
  for (std::size_t i = 1; i < kappa_seq.size(); ++i)
    if (!(kappa_seq[i].abs() < kappa_seq[i - 1].abs()))
      throw RangeError("kappa sequence must shrink monotonically");

  ConvergenceReport report;
  report.m = m;
  report.n = n;
  report.nu = nu;
  const BiPoly hermite = complex_hermite(m, n, nu);

  std::vector<BiPoly> polys;
  polys.reserve(kappa_seq.size());
  for (const Rational& kappa : kappa_seq) {
    const SurfaceMagneticParams params = SurfaceMagneticParams::create(kappa, nu);
    polys.push_back(poly_via_ladder(params, m, n));
    ConvergencePoint pt;
    pt.kappa = kappa;
    pt.exact_diff = max_abs_diff(polys.back(), hermite);
    pt.diff = pt.exact_diff.to_double();
    report.points.push_back(std::move(pt));
  }
  report.fitted_order = fit_order(report.points);

  // Exact Lagrange extrapolation of every coefficient to kappa = 0. The
  // coefficients depend polynomially on kappa at fixed nu, so enough nodes
  // reproduce the limit exactly.
  std::set<Monomial> support;
  for (const BiPoly& p : polys)
    for (const auto& [mono, c] : p.terms()) support.insert(mono);
  for (const auto& [mono, c] : hermite.terms()) support.insert(mono);

  std::vector<Rational> lagrange_at_zero(kappa_seq.size(), Rational(1));
  for (std::size_t k = 0; k < kappa_seq.size(); ++k) {
    for (std::size_t j = 0; j < kappa_seq.size(); ++j) {
      if (j == k) continue;
      lagrange_at_zero[k] *= -kappa_seq[j] / (kappa_seq[k] - kappa_seq[j]);
    }
  }
  Rational extrapolated(0);
  for (const Monomial& mono : support) {
    Rational value(0);
    for (std::size_t k = 0; k < polys.size(); ++k)
      value += polys[k].coeff(mono.z, mono.zbar) * lagrange_at_zero[k];
    extrapolated = std::max(extrapolated, (value - hermite.coeff(mono.z, mono.zbar)).abs());
  }
  report.extrapolated_diff = extrapolated.to_double();
  const double scale = 1.0 + hermite.max_abs_coeff().to_double();
  report.extrapolated_match =
      monotone_decreasing(report.points) && report.extrapolated_diff <= 1e-8 * scale;
  return report;
}

std::vector<double> weight_limit_check(const Rational& nu, long m,
                                       const std::vector<Rational>& kappa_seq,
                                       const std::vector<std::complex<double>>& sample_points) {
  std::vector<double> errors;
  errors.reserve(kappa_seq.size());
  const double nu_d = nu.to_double();
  for (const Rational& kappa : kappa_seq) {
    const double kd = kappa.to_double();
    const double expo = (nu / kappa + Rational(m)).to_double();
    double worst = 0.0;
    for (const auto& z : sample_points) {
      const double r2 = std::norm(z);
      const double base = 1.0 + kd * r2;
      if (base <= 0.0) throw EvalDomainError("sample point outside the chart");
      worst = std::max(worst, std::abs(std::pow(base, expo) - std::exp(nu_d * r2)));
    }
    errors.push_back(worst);
  }
  return errors;
}

RouteCrosscheck route_crosscheck(const SurfaceMagneticParams& params, long m_max, long n_max) {
  RouteCrosscheck report;
  report.kappa = params.kappa;
  report.nu = params.nu;
  report.all_routes_equal = true;
  report.jacobi_ratio_one_for_m_le_n = true;

  const ParamCheck check = validate_params(params.kappa, params.nu);
  const long top_m = check.max_m ? std::min(m_max, *check.max_m) : m_max;
  for (long m = 0; m <= top_m; ++m) {
    const LevelSpec spec = level_spec(params, m);
    const long top_n = spec.n_max ? std::min(n_max, *spec.n_max) : n_max;
    for (long n = 0; n <= top_n; ++n) {
      RouteCrosscheck::Entry entry;
      entry.m = m;
      entry.n = n;
      const BiPoly ladder = poly_via_ladder(params, m, n);
      const BiPoly rod_d = poly_via_d(params, m, n);
      const BiPoly rod_mixed = poly_via_mixed_rodrigues(params, m, n);
      const BiPoly jacobi = poly_via_jacobi(params, m, n);
      entry.routes_equal = (ladder == rod_d) && (ladder == rod_mixed);
      if (!entry.routes_equal) report.all_routes_equal = false;
      if (ladder.is_zero() || jacobi.is_zero()) {
        entry.jacobi_ratio = Rational(0);
        report.jacobi_ratio_one_for_m_le_n = false;
      } else {
        const auto& [mono, lead] = *ladder.terms().begin();
        const Rational ratio = jacobi.coeff(mono.z, mono.zbar) / lead;
        if (jacobi == ladder.scaled(ratio)) {
          entry.jacobi_ratio = ratio;
        } else {
          entry.jacobi_ratio = Rational(0);  // not proportional
        }
        if (m <= n && entry.jacobi_ratio != Rational(1))
          report.jacobi_ratio_one_for_m_le_n = false;
        if (entry.jacobi_ratio.is_zero()) report.all_routes_equal = false;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

std::vector<Rational> default_kappa_sequence(int k_lo, int k_hi, int sign) {
  if (k_lo > k_hi || k_lo < 0 || k_hi > 62) throw RangeError("bad kappa exponent range");
  std::vector<Rational> seq;
  for (int k = k_lo; k <= k_hi; ++k)
    seq.emplace_back(sign >= 0 ? 1 : -1, 1L << k);
  return seq;
}

}  // namespace twistlap
