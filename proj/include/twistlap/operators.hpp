#pragma once

#include <optional>
#include <span>
#include <string>

#include "twistlap/params.hpp"
#include "twistlap/weighted.hpp"

namespace twistlap {

// nabla_alpha = -(1 + kappa|z|^2) d/dz + alpha zbar.
// At kappa = 0 the prefactor is 1 and f must live in the exponential family.
WeightedFn nabla(const Rational& alpha, const WeightedFn& f, const Rational& kappa);

// nabla*_alpha = (1 + kappa|z|^2) d/dzbar + (alpha - kappa) z,
// the formal adjoint of nabla_alpha for the surface measure.
WeightedFn nabla_star(const Rational& alpha, const WeightedFn& f, const Rational& kappa);

// -{ (1+kappa|z|^2)^2 d^2/dz dzbar
//    + nu (1+kappa|z|^2)(z d/dz - zbar d/dzbar) - nu^2 |z|^2 }.
// The raw overload takes any rational coupling (the operator identities need
// shifted couplings like nu + kappa that may fall outside the valid range).
WeightedFn twisted_laplacian(const Rational& kappa, const Rational& nu, const WeightedFn& f);
WeightedFn twisted_laplacian(const SurfaceMagneticParams& params, const WeightedFn& f);

// m-fold application of D_kappa = (1+kappa|z|^2)^2 d/dz; kappa != 0.
WeightedFn d_power(long m, const WeightedFn& f, const Rational& kappa);

// nabla_{nu+kappa} o nabla_{nu+2 kappa} o ... o nabla_{nu+m kappa}, applied
// rightmost-first; m = 0 is the identity.
WeightedFn ladder_chain(const Rational& kappa, const Rational& nu, long m, const WeightedFn& f);
WeightedFn ladder_chain(const SurfaceMagneticParams& params, long m, const WeightedFn& f);

struct OperatorReport {
  std::string identity;
  int probe_count = 0;
  bool all_passed = false;
  struct Failure {
    std::string probe;
    std::string lhs;
    std::string rhs;
  };
  std::optional<Failure> first_failure;
};

// nabla nabla* = L - nu  and  nabla* nabla = L^{nu+kappa} + (nu+kappa),
// checked exactly on every probe.
OperatorReport verify_factorization(const SurfaceMagneticParams& params,
                                    std::span<const WeightedFn> probes);

// L^nu nabla_{nu+kappa} = nabla_{nu+kappa} L^{nu+kappa} + (2nu+kappa) nabla_{nu+kappa}.
OperatorReport verify_intertwining(const SurfaceMagneticParams& params,
                                   std::span<const WeightedFn> probes);

// D^m f = (1+kappa|z|^2)^{m+1} d^m/dz^m ((1+kappa|z|^2)^{m-1} f), kappa != 0.
OperatorReport verify_d_power_reduction(long m, const Rational& kappa,
                                        std::span<const WeightedFn> probes);

}  // namespace twistlap
