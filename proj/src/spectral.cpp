#include "twistlap/spectral.hpp"

#include <cmath>
#include <string>

#include "twistlap/errors.hpp"
#include "twistlap/jacobi.hpp"
#include "twistlap/operators.hpp"

namespace twistlap {

double PiRational::to_double() const {
  return q.to_double() * 3.14159265358979323846;
}

std::string PiRational::to_string() const {
  if (q.is_zero()) return "0";
  return q.to_string() + " pi";
}

const PiRational& MomentResult::value() const {
  if (!value_) throw Error("divergent moment has no value");
  return *value_;
}

std::string MomentResult::to_string() const {
  return value_ ? value_->to_string() : "divergent";
}

MomentResult radial_moment(const SurfaceMagneticParams& params, long j, const Rational& sigma) {
  if (j < 0) throw RangeError("radial moment with negative power");
  const Rational& kappa = params.kappa;
  if (kappa.sign() < 0) {
    // pi (-kappa)^{-j-1} B(j+1, 1-sigma) over the disc; converges iff sigma < 1.
    const Rational c = Rational(1) - sigma;
    if (c.sign() <= 0) return MomentResult::divergent();
    const Rational beta = factorial(j) / pochhammer(c, j + 1);
    return MomentResult::finite((-kappa).pow(-(j + 1)) * beta);
  }
  if (kappa.sign() > 0) {
    // pi kappa^{-j-1} B(j+1, sigma-j-1) over the plane chart.
    const Rational c = sigma - Rational(j + 1);
    if (c.sign() <= 0) return MomentResult::divergent();
    const Rational beta = factorial(j) / pochhammer(c, j + 1);
    return MomentResult::finite(kappa.pow(-(j + 1)) * beta);
  }
  // kappa = 0: pi j! / c^{j+1} for the Gaussian rate c = sigma.
  if (sigma.sign() <= 0) return MomentResult::divergent();
  return MomentResult::finite(factorial(j) / sigma.pow(j + 1));
}

MomentResult inner_product(const SurfaceMagneticParams& params, const WeightedFn& f,
                           const WeightedFn& g) {
  const bool flat = params.kappa.is_zero();
  if (flat != f.is_exp() || flat != g.is_exp())
    throw DomainMismatchError("inner product across weight families");
  if (!flat && (f.power_weight().kappa != params.kappa ||
                g.power_weight().kappa != params.kappa))
    throw DomainMismatchError("inner product across curvatures");
  if (f.is_zero() || g.is_zero()) return MomentResult::finite(Rational(0));

  Rational sigma;  // profile parameter passed to radial_moment
  if (flat) {
    sigma = -(f.exp_weight().c + g.exp_weight().c);
  } else {
    sigma = Rational(2) - f.power_weight().s - g.power_weight().s;
  }
  const BiPoly prod = f.poly() * g.poly().conjugated();
  Rational acc(0);
  for (const auto& [mono, c] : prod.terms()) {
    if (mono.z != mono.zbar) continue;  // angular integration kills the rest
    const MomentResult moment = radial_moment(params, mono.z, sigma);
    if (moment.is_divergent()) return MomentResult::divergent();
    acc += c * moment.value().q;
  }
  return MomentResult::finite(acc);
}

MomentResult norm_squared(const SurfaceMagneticParams& params, const WeightedFn& f) {
  return inner_product(params, f, f);
}

LevelSpec level_spec(const SurfaceMagneticParams& params, long m) {
  if (!params.level_in_range(m))
    throw RangeError("level m=" + std::to_string(m) + " beyond the Landau bound");
  LevelSpec spec;
  spec.m = m;
  if (params.kappa.sign() > 0) {
    const Rational flux = Rational(2) * params.nu / params.kappa;
    spec.n_max = flux.to_long() + m;
  }
  return spec;
}

WeightedFn eigenfunction(const SurfaceMagneticParams& params, long m, long n, Bounds bounds) {
  if (m < 0 || n < 0) throw RangeError("negative eigenfunction index");
  if (params.kappa.is_zero()) {
    return WeightedFn::exponential(-params.nu, complex_hermite(m, n, params.nu));
  }
  if (bounds == Bounds::checked) {
    if (!params.level_in_range(m))
      throw RangeError("level m=" + std::to_string(m) + " beyond the Landau bound");
    if (!level_spec(params, m).allows(n))
      throw RangeError("n=" + std::to_string(n) + " beyond the level spectrum");
  }
  const Rational tm = params.nu_over_kappa() + Rational(m);
  return WeightedFn::power(params.kappa, -tm, poly_via_ladder(params, m, n, bounds));
}

bool verify_eigen(const SurfaceMagneticParams& params, long m, long n, Bounds bounds) {
  const WeightedFn phi = eigenfunction(params, m, n, bounds);
  const WeightedFn lhs = twisted_laplacian(params, phi);
  const WeightedFn rhs = phi.scaled(eigenvalue(params.kappa, params.nu, m));
  return lhs.equals(rhs);
}

std::vector<std::vector<MomentResult>> gram_matrix(
    const SurfaceMagneticParams& params, const std::vector<std::pair<long, long>>& entries) {
  std::vector<WeightedFn> fns;
  fns.reserve(entries.size());
  for (const auto& [m, n] : entries) fns.push_back(eigenfunction(params, m, n));
  std::vector<std::vector<MomentResult>> out;
  out.reserve(entries.size());
  for (std::size_t r = 0; r < fns.size(); ++r) {
    std::vector<MomentResult> row;
    row.reserve(entries.size());
    for (std::size_t c = 0; c < fns.size(); ++c)
      row.push_back(inner_product(params, fns[r], fns[c]));
    out.push_back(std::move(row));
  }
  return out;
}

WeightedFn jacobi_basis_element(const SurfaceMagneticParams& params, long m, long p, long q) {
  if (params.kappa.is_zero())
    throw DomainMismatchError("basis element requires kappa != 0");
  if (m < 0 || p < 0 || q < 0) throw RangeError("negative basis index");
  if (q > m) throw RangeError("basis element requires q <= m");
  if (p != 0 && q != 0) throw RangeError("basis element requires p q = 0");
  if (!params.level_in_range(m))
    throw RangeError("level m=" + std::to_string(m) + " beyond the Landau bound");
  const Rational tm = params.nu_over_kappa() + Rational(m);
  const UniPoly radial =
      jacobi_poly(m - q, Rational(p + q), Rational(-2) * tm - Rational(1));
  BiPoly arg = BiPoly::constant(Rational(1));
  arg.add_term({1, 1}, Rational(2) * params.kappa);
  const BiPoly poly =
      BiPoly::monomial(static_cast<int>(p), static_cast<int>(q), Rational(1)) *
      radial.eval_at(arg);
  return WeightedFn::power(params.kappa, -tm, poly);
}

}  // namespace twistlap
