#pragma once

#include <optional>
#include <string>
#include <variant>

#include "twistlap/bipoly.hpp"

namespace twistlap {

// (1 + kappa |z|^2)^s with kappa != 0.
struct PowerWeight {
  Rational kappa;
  Rational s;
};

// e^{c |z|^2}; the flat (kappa = 0) weight family.
struct ExpWeight {
  Rational c;
};

using Weight = std::variant<PowerWeight, ExpWeight>;

// A weight times a polynomial in z, zbar. This class is closed under every
// operator in the library (multiplication, partial derivatives, the ladder
// operators and the twisted Laplacian).
//
// Canonical form: for a power weight the polynomial part is not divisible by
// (1 + kappa z zbar) — each such factor is absorbed into the exponent — and
// the zero function carries exponent 0. Exponential weights keep c as given.
class WeightedFn {
 public:
  WeightedFn(Weight w, BiPoly p);
  static WeightedFn power(const Rational& kappa, const Rational& s, BiPoly p);
  static WeightedFn exponential(const Rational& c, BiPoly p);
  static WeightedFn zero_like(const WeightedFn& f);

  bool is_power() const { return std::holds_alternative<PowerWeight>(weight_); }
  bool is_exp() const { return std::holds_alternative<ExpWeight>(weight_); }
  const PowerWeight& power_weight() const;
  const ExpWeight& exp_weight() const;
  const BiPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  WeightedFn derivative(Var v) const;
  WeightedFn scaled(const Rational& r) const;
  WeightedFn times(const BiPoly& q) const;
  // Multiplies by (1 + kappa z zbar)^ds; power family only.
  WeightedFn shifted(const Rational& ds) const;
  WeightedFn plus(const WeightedFn& o) const;
  WeightedFn minus(const WeightedFn& o) const;

  // Exact equality of canonical forms. Mixing weight families (or curvatures)
  // is a domain mismatch.
  bool equals(const WeightedFn& o) const;

  // Throws EvalDomainError when 1 + kappa |z|^2 <= 0 (outside the chart).
  std::complex<double> eval(std::complex<double> z) const;

  std::string to_string() const;

 private:
  Weight weight_;
  BiPoly poly_;
  void canonicalize();
};

// Exact division by (1 + kappa z zbar), by long division in zbar with
// Laurent coefficients in z; nullopt when the remainder is nonzero.
std::optional<BiPoly> divide_by_weight_base(const BiPoly& p, const Rational& kappa);

}  // namespace twistlap
