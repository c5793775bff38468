#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twistlap/weighted.hpp"

namespace twistlap {

// Deterministic probe generator for the randomized identity suites.
// Distribution: monomial exponents <= 5, coefficients in {-9..9}/{1..4},
// weight exponents +/- small rationals with denominator <= 4.
class ProbeGen {
 public:
  explicit ProbeGen(std::uint64_t seed) : rng_(seed) {}

  long next_long(long lo, long hi);
  Rational next_coeff();           // nonzero
  Rational next_small_rational();  // may be zero
  BiPoly next_bipoly(int max_degree = 5, int max_terms = 6);
  WeightedFn next_power_fn(const Rational& kappa, int max_degree = 5);
  WeightedFn next_exp_fn(int max_degree = 5);

  // Power-family probes for kappa != 0, exponential-family probes otherwise.
  std::vector<WeightedFn> probe_set(const Rational& kappa, int count);

 private:
  std::mt19937_64 rng_;
};

}  // namespace twistlap
