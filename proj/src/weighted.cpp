#include "twistlap/weighted.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "twistlap/errors.hpp"

namespace twistlap {

namespace {

// Coefficients in z (exponent may go negative during division), per zbar power.
using LaurentInZ = std::map<int, Rational>;

void laurent_add(LaurentInZ& a, int i, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = a.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

// Divides a Laurent-in-z coefficient block by kappa * z.
LaurentInZ divide_by_kappa_z(const LaurentInZ& a, const Rational& kappa) {
  LaurentInZ r;
  for (const auto& [i, c] : a) r.emplace(i - 1, c / kappa);
  return r;
}

}  // namespace

std::optional<BiPoly> divide_by_weight_base(const BiPoly& p, const Rational& kappa) {
  if (kappa.is_zero()) throw DomainMismatchError("weight base requires kappa != 0");
  if (p.is_zero()) return BiPoly();

  // p = sum_j a_j(z) zbar^j; solve p = q * (1 + kappa z zbar) + r with
  // q = sum b_j zbar^j:  b_{J-1} = a_J / (kappa z),
  // b_{j-1} = (a_j - b_j) / (kappa z),  r = a_0 - b_0.
  std::map<int, LaurentInZ> rows;
  int top = 0;
  for (const auto& [mono, c] : p.terms()) {
    rows[mono.zbar].emplace(mono.z, c);
    top = std::max(top, mono.zbar);
  }
  if (top == 0) return std::nullopt;  // nonzero, zbar-free: cannot contain the base

  std::map<int, LaurentInZ> quotient;
  quotient[top - 1] = divide_by_kappa_z(rows[top], kappa);
  for (int j = top - 1; j >= 1; --j) {
    LaurentInZ diff = rows.count(j) ? rows[j] : LaurentInZ{};
    for (const auto& [i, c] : quotient[j]) laurent_add(diff, i, -c);
    quotient[j - 1] = divide_by_kappa_z(diff, kappa);
  }
  LaurentInZ remainder = rows.count(0) ? rows[0] : LaurentInZ{};
  for (const auto& [i, c] : quotient[0]) laurent_add(remainder, i, -c);
  if (!remainder.empty()) return std::nullopt;

  BiPoly q;
  for (const auto& [j, row] : quotient)
    for (const auto& [i, c] : row) {
      if (i < 0) return std::nullopt;  // quotient escaped the polynomial ring
      q.add_term({i, j}, c);
    }
  return q;
}

WeightedFn::WeightedFn(Weight w, BiPoly p) : weight_(std::move(w)), poly_(std::move(p)) {
  if (is_power() && power_weight().kappa.is_zero())
    throw DomainMismatchError("power weight requires kappa != 0");
  canonicalize();
}

WeightedFn WeightedFn::power(const Rational& kappa, const Rational& s, BiPoly p) {
  return WeightedFn(PowerWeight{kappa, s}, std::move(p));
}

WeightedFn WeightedFn::exponential(const Rational& c, BiPoly p) {
  return WeightedFn(ExpWeight{c}, std::move(p));
}

WeightedFn WeightedFn::zero_like(const WeightedFn& f) {
  return WeightedFn(f.weight_, BiPoly());
}

const PowerWeight& WeightedFn::power_weight() const {
  if (!is_power()) throw DomainMismatchError("not a power-weight function");
  return std::get<PowerWeight>(weight_);
}

const ExpWeight& WeightedFn::exp_weight() const {
  if (!is_exp()) throw DomainMismatchError("not an exponential-weight function");
  return std::get<ExpWeight>(weight_);
}

void WeightedFn::canonicalize() {
  if (!is_power()) return;
  auto& w = std::get<PowerWeight>(weight_);
  if (poly_.is_zero()) {
    w.s = Rational(0);
    return;
  }
  while (true) {
    auto q = divide_by_weight_base(poly_, w.kappa);
    if (!q) break;
    poly_ = std::move(*q);
    w.s += Rational(1);
  }
}

WeightedFn WeightedFn::derivative(Var v) const {
  // Conjugate-variable factor from the weight: d/dz acting on the weight
  // produces s*kappa*zbar (power) or c*zbar (exp), and symmetrically for dzbar.
  const BiPoly cofactor = BiPoly::variable(v == Var::z ? Var::zbar : Var::z);
  if (is_power()) {
    const auto& w = power_weight();
    // d(w^s p) = w^{s-1} (w dp + s kappa cofact p)
    BiPoly q = weight_base(w.kappa) * poly_.derivative(v) +
               (cofactor * poly_).scaled(w.s * w.kappa);
    return WeightedFn(PowerWeight{w.kappa, w.s - Rational(1)}, std::move(q));
  }
  const auto& w = exp_weight();
  BiPoly q = poly_.derivative(v) + (cofactor * poly_).scaled(w.c);
  return WeightedFn(ExpWeight{w.c}, std::move(q));
}

WeightedFn WeightedFn::scaled(const Rational& r) const {
  return WeightedFn(weight_, poly_.scaled(r));
}

WeightedFn WeightedFn::times(const BiPoly& q) const {
  return WeightedFn(weight_, poly_ * q);
}

WeightedFn WeightedFn::shifted(const Rational& ds) const {
  const auto& w = power_weight();
  if (is_zero()) return *this;
  return WeightedFn(PowerWeight{w.kappa, w.s + ds}, poly_);
}

WeightedFn WeightedFn::plus(const WeightedFn& o) const {
  if (is_power() != o.is_power())
    throw DomainMismatchError("adding functions from different weight families");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_power()) {
    const auto& wa = power_weight();
    const auto& wb = o.power_weight();
    if (wa.kappa != wb.kappa)
      throw DomainMismatchError("adding power weights with different curvature");
    const Rational ds = wa.s - wb.s;
    if (!ds.is_integer())
      throw DomainMismatchError("weight exponents differ by a non-integer");
    // Lower the larger exponent by multiplying its polynomial by the base.
    const long k = ds.to_long();
    if (k >= 0) {
      BiPoly lifted = poly_;
      const BiPoly base = weight_base(wa.kappa);
      for (long i = 0; i < k; ++i) lifted = lifted * base;
      return WeightedFn(PowerWeight{wa.kappa, wb.s}, lifted + o.poly_);
    }
    BiPoly lifted = o.poly_;
    const BiPoly base = weight_base(wa.kappa);
    for (long i = 0; i < -k; ++i) lifted = lifted * base;
    return WeightedFn(PowerWeight{wa.kappa, wa.s}, poly_ + lifted);
  }
  if (exp_weight().c != o.exp_weight().c)
    throw DomainMismatchError("adding exponential weights with different rates");
  return WeightedFn(weight_, poly_ + o.poly_);
}

WeightedFn WeightedFn::minus(const WeightedFn& o) const {
  return plus(o.scaled(Rational(-1)));
}

bool WeightedFn::equals(const WeightedFn& o) const {
  if (is_power() != o.is_power())
    throw DomainMismatchError("comparing functions from different weight families");
  if (is_power() && power_weight().kappa != o.power_weight().kappa)
    throw DomainMismatchError("comparing power weights with different curvature");
  if (is_zero() && o.is_zero()) return true;
  if (is_power()) {
    return power_weight().s == o.power_weight().s && poly_ == o.poly_;
  }
  return exp_weight().c == o.exp_weight().c && poly_ == o.poly_;
}

std::complex<double> WeightedFn::eval(std::complex<double> z) const {
  const double r2 = std::norm(z);
  double wv = 0.0;
  if (is_power()) {
    const auto& w = power_weight();
    const double base = 1.0 + w.kappa.to_double() * r2;
    if (base <= 0.0)
      throw EvalDomainError("evaluation outside the surface chart (1 + kappa|z|^2 <= 0)");
    wv = std::pow(base, w.s.to_double());
  } else {
    wv = std::exp(exp_weight().c.to_double() * r2);
  }
  return wv * poly_.eval(z);
}

std::string WeightedFn::to_string() const {
  std::ostringstream out;
  if (is_power()) {
    const auto& w = power_weight();
    out << "(1 + (" << w.kappa.to_string() << ")*z*zbar)^(" << w.s.to_string() << ")";
  } else {
    out << "exp((" << exp_weight().c.to_string() << ")*z*zbar)";
  }
  out << " * [" << poly_.to_string() << "]";
  return out.str();
}

}  // namespace twistlap
