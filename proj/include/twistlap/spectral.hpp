#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twistlap/params.hpp"
#include "twistlap/polynomials.hpp"
#include "twistlap/weighted.hpp"

namespace twistlap {

// Exact multiple of pi; the value type of inner products and norms.
struct PiRational {
  Rational q;

  friend PiRational operator+(const PiRational& a, const PiRational& b) {
    return PiRational{a.q + b.q};
  }
  PiRational scaled(const Rational& r) const { return PiRational{q * r}; }
  friend bool operator==(const PiRational& a, const PiRational& b) = default;
  bool is_zero() const { return q.is_zero(); }
  double to_double() const;
  std::string to_string() const;
};

// Finite exact value or divergence; divergence encodes non-membership in L^2.
class MomentResult {
 public:
  static MomentResult finite(PiRational v) { return MomentResult(std::move(v)); }
  static MomentResult finite(Rational q) { return MomentResult(PiRational{std::move(q)}); }
  static MomentResult divergent() { return MomentResult(); }

  bool is_divergent() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const PiRational& value() const;  // throws when divergent
  friend bool operator==(const MomentResult&, const MomentResult&) = default;
  std::string to_string() const;

 private:
  MomentResult() = default;
  explicit MomentResult(PiRational v) : value_(std::move(v)) {}
  std::optional<PiRational> value_;
};

// Integral of |z|^{2j} (1+kappa|z|^2)^{-sigma} over the surface chart for
// kappa != 0, reduced to an exact Beta value; for kappa = 0, sigma plays the
// role of the Gaussian rate c in |z|^{2j} e^{-c|z|^2}.
MomentResult radial_moment(const SurfaceMagneticParams& params, long j, const Rational& sigma);

// L^2(M_kappa; (1+kappa z zbar)^{-2} dlambda) pairing of two weighted
// functions. Only angularly neutral monomials contribute; the result is
// divergent as soon as any contributing moment diverges.
MomentResult inner_product(const SurfaceMagneticParams& params, const WeightedFn& f,
                           const WeightedFn& g);
MomentResult norm_squared(const SurfaceMagneticParams& params, const WeightedFn& f);

// Admissible n range at level m: all naturals for kappa <= 0, and the finite
// range n <= 2nu/kappa + m on the sphere chart.
struct LevelSpec {
  long m = 0;
  std::optional<long> n_max;  // nullopt: all naturals
  bool allows(long n) const { return n >= 0 && (!n_max || n <= *n_max); }
};
LevelSpec level_spec(const SurfaceMagneticParams& params, long m);

// Phi_{m,n}: the level-m eigenfunction with weight exponent -(nu/kappa + m)
// and polynomial part P_{m,n}; at kappa = 0, e^{-nu|z|^2} H_{m,n}.
WeightedFn eigenfunction(const SurfaceMagneticParams& params, long m, long n,
                         Bounds bounds = Bounds::checked);

// True iff  L Phi_{m,n} = E_{kappa,m}^nu Phi_{m,n}  exactly.
bool verify_eigen(const SurfaceMagneticParams& params, long m, long n,
                  Bounds bounds = Bounds::checked);

std::vector<std::vector<MomentResult>> gram_matrix(
    const SurfaceMagneticParams& params, const std::vector<std::pair<long, long>>& entries);

// Basis element (1+kappa|z|^2)^{-(nu/kappa+m)} z^p zbar^q
// P_{m-q}^{(p+q, -2(nu/kappa+m)-1)}(1+2kappa|z|^2), q <= m, p q = 0
// (read as: at least one of p, q vanishes).
WeightedFn jacobi_basis_element(const SurfaceMagneticParams& params, long m, long p, long q);

}  // namespace twistlap
