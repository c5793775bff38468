#include "twistlap/operators.hpp"

#include "twistlap/errors.hpp"

namespace twistlap {

namespace {

void require_family(const WeightedFn& f, const Rational& kappa, const char* who) {
  if (kappa.is_zero()) {
    if (!f.is_exp())
      throw DomainMismatchError(std::string(who) + ": kappa = 0 needs the exponential family");
    return;
  }
  if (!f.is_power() || f.power_weight().kappa != kappa)
    throw DomainMismatchError(std::string(who) + ": weight curvature does not match kappa");
}

OperatorReport run_probes(std::string identity, std::span<const WeightedFn> probes,
                          const auto& lhs_fn, const auto& rhs_fn) {
  OperatorReport report;
  report.identity = std::move(identity);
  report.probe_count = static_cast<int>(probes.size());
  report.all_passed = true;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const WeightedFn lhs = lhs_fn(probes[i]);
    const WeightedFn rhs = rhs_fn(probes[i]);
    if (!lhs.equals(rhs)) {
      report.all_passed = false;
      report.first_failure = OperatorReport::Failure{
          "probe #" + std::to_string(i) + ": " + probes[i].to_string(),
          lhs.to_string(), rhs.to_string()};
      break;
    }
  }
  return report;
}

}  // namespace

WeightedFn nabla(const Rational& alpha, const WeightedFn& f, const Rational& kappa) {
  require_family(f, kappa, "nabla");
  const BiPoly zbar = BiPoly::variable(Var::zbar);
  if (kappa.is_zero())
    return f.derivative(Var::z).scaled(Rational(-1)).plus(f.times(zbar).scaled(alpha));
  WeightedFn d = f.derivative(Var::z).shifted(Rational(1)).scaled(Rational(-1));
  return d.plus(f.times(zbar).scaled(alpha));
}

WeightedFn nabla_star(const Rational& alpha, const WeightedFn& f, const Rational& kappa) {
  require_family(f, kappa, "nabla_star");
  const BiPoly z = BiPoly::variable(Var::z);
  if (kappa.is_zero())
    return f.derivative(Var::zbar).plus(f.times(z).scaled(alpha));
  WeightedFn d = f.derivative(Var::zbar).shifted(Rational(1));
  return d.plus(f.times(z).scaled(alpha - kappa));
}

WeightedFn twisted_laplacian(const Rational& kappa, const Rational& nu, const WeightedFn& f) {
  require_family(f, kappa, "twisted_laplacian");
  const BiPoly z = BiPoly::variable(Var::z);
  const BiPoly zbar = BiPoly::variable(Var::zbar);
  const BiPoly zzbar = z * zbar;
  if (kappa.is_zero()) {
    WeightedFn mixed = f.derivative(Var::z).derivative(Var::zbar);
    WeightedFn drift =
        f.derivative(Var::z).times(z).minus(f.derivative(Var::zbar).times(zbar)).scaled(nu);
    WeightedFn potential = f.times(zzbar).scaled(nu * nu);
    return potential.minus(mixed).minus(drift);
  }
  WeightedFn mixed = f.derivative(Var::z).derivative(Var::zbar).shifted(Rational(2));
  WeightedFn drift = f.derivative(Var::z)
                         .times(z)
                         .minus(f.derivative(Var::zbar).times(zbar))
                         .shifted(Rational(1))
                         .scaled(nu);
  WeightedFn potential = f.times(zzbar).scaled(nu * nu);
  return potential.minus(mixed).minus(drift);
}

WeightedFn twisted_laplacian(const SurfaceMagneticParams& params, const WeightedFn& f) {
  return twisted_laplacian(params.kappa, params.nu, f);
}

WeightedFn d_power(long m, const WeightedFn& f, const Rational& kappa) {
  if (kappa.is_zero())
    throw DomainMismatchError("d_power requires kappa != 0 (use plain d/dz^m at kappa = 0)");
  if (m < 0) throw RangeError("d_power with negative order");
  require_family(f, kappa, "d_power");
  WeightedFn g = f;
  for (long i = 0; i < m; ++i) g = g.derivative(Var::z).shifted(Rational(2));
  return g;
}

WeightedFn ladder_chain(const Rational& kappa, const Rational& nu, long m, const WeightedFn& f) {
  if (m < 0) throw RangeError("ladder_chain with negative length");
  WeightedFn g = f;
  for (long j = m; j >= 1; --j) g = nabla(nu + Rational(j) * kappa, g, kappa);
  return g;
}

WeightedFn ladder_chain(const SurfaceMagneticParams& params, long m, const WeightedFn& f) {
  return ladder_chain(params.kappa, params.nu, m, f);
}

OperatorReport verify_factorization(const SurfaceMagneticParams& params,
                                    std::span<const WeightedFn> probes) {
  const Rational& kappa = params.kappa;
  const Rational& nu = params.nu;
  const Rational alpha = nu + kappa;
  // Both identities checked per probe; a report failure names the side.
  OperatorReport report;
  report.identity = "factorization";
  report.probe_count = static_cast<int>(probes.size());
  report.all_passed = true;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const WeightedFn& f = probes[i];
    const WeightedFn lhs1 = nabla(alpha, nabla_star(alpha, f, kappa), kappa);
    const WeightedFn rhs1 = twisted_laplacian(kappa, nu, f).minus(f.scaled(nu));
    if (!lhs1.equals(rhs1)) {
      report.all_passed = false;
      report.first_failure = OperatorReport::Failure{
          "probe #" + std::to_string(i) + " (nabla nabla* = L - nu): " + f.to_string(),
          lhs1.to_string(), rhs1.to_string()};
      break;
    }
    const WeightedFn lhs2 = nabla_star(alpha, nabla(alpha, f, kappa), kappa);
    const WeightedFn rhs2 = twisted_laplacian(kappa, nu + kappa, f).plus(f.scaled(nu + kappa));
    if (!lhs2.equals(rhs2)) {
      report.all_passed = false;
      report.first_failure = OperatorReport::Failure{
          "probe #" + std::to_string(i) +
              " (nabla* nabla = L^{nu+kappa} + (nu+kappa)): " + f.to_string(),
          lhs2.to_string(), rhs2.to_string()};
      break;
    }
  }
  return report;
}

OperatorReport verify_intertwining(const SurfaceMagneticParams& params,
                                   std::span<const WeightedFn> probes) {
  const Rational& kappa = params.kappa;
  const Rational& nu = params.nu;
  const Rational alpha = nu + kappa;
  return run_probes(
      "intertwining", probes,
      [&](const WeightedFn& f) {
        return twisted_laplacian(kappa, nu, nabla(alpha, f, kappa));
      },
      [&](const WeightedFn& f) {
        const WeightedFn step = nabla(alpha, twisted_laplacian(kappa, nu + kappa, f), kappa);
        return step.plus(nabla(alpha, f, kappa).scaled(Rational(2) * nu + kappa));
      });
}

OperatorReport verify_d_power_reduction(long m, const Rational& kappa,
                                        std::span<const WeightedFn> probes) {
  if (kappa.is_zero()) throw DomainMismatchError("D-power reduction check requires kappa != 0");
  if (m < 0) throw RangeError("D-power reduction check with negative order");
  return run_probes(
      "d_power_reduction(m=" + std::to_string(m) + ")", probes,
      [&](const WeightedFn& f) { return d_power(m, f, kappa); },
      [&](const WeightedFn& f) {
        WeightedFn g = f.shifted(Rational(m - 1));
        for (long i = 0; i < m; ++i) g = g.derivative(Var::z);
        return g.shifted(Rational(m + 1));
      });
}

}  // namespace twistlap
