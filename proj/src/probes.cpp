#include "twistlap/probes.hpp"

#include "twistlap/errors.hpp"

namespace twistlap {

long ProbeGen::next_long(long lo, long hi) {
  if (hi < lo) throw Error("empty probe range");
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational ProbeGen::next_coeff() {
  long num = 0;
  while (num == 0) num = next_long(-9, 9);
  return Rational(num, next_long(1, 4));
}

Rational ProbeGen::next_small_rational() {
  return Rational(next_long(-3, 3), next_long(1, 4));
}

BiPoly ProbeGen::next_bipoly(int max_degree, int max_terms) {
  BiPoly p;
  const long terms = next_long(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    const int i = static_cast<int>(next_long(0, max_degree));
    const int j = static_cast<int>(next_long(0, max_degree));
    p.add_term({i, j}, next_coeff());
  }
  return p;
}

WeightedFn ProbeGen::next_power_fn(const Rational& kappa, int max_degree) {
  return WeightedFn::power(kappa, next_small_rational(), next_bipoly(max_degree));
}

WeightedFn ProbeGen::next_exp_fn(int max_degree) {
  return WeightedFn::exponential(next_small_rational(), next_bipoly(max_degree));
}

std::vector<WeightedFn> ProbeGen::probe_set(const Rational& kappa, int count) {
  std::vector<WeightedFn> probes;
  probes.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    probes.push_back(kappa.is_zero() ? next_exp_fn() : next_power_fn(kappa));
  return probes;
}

}  // namespace twistlap
