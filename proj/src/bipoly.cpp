#include "twistlap/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "twistlap/errors.hpp"

namespace twistlap {

BiPoly BiPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw Error("monomial with negative exponent");
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::variable(Var v) {
  return v == Var::z ? monomial(1, 0, Rational(1)) : monomial(0, 1, Rational(1));
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_z() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.z);
  return d;
}

int BiPoly::degree_zbar() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.zbar);
  return d;
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.z + mono.zbar);
  return d;
}

Rational BiPoly::max_abs_coeff() const {
  Rational m(0);
  for (const auto& [mono, c] : terms_) m = std::max(m, c.abs());
  return m;
}

BiPoly BiPoly::operator-() const { return scaled(Rational(-1)); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [mono, c] : b.terms_) r.add_term(mono, -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.z + mb.z, ma.zbar + mb.zbar}, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Rational& r) const {
  BiPoly p;
  if (r.is_zero()) return p;
  for (const auto& [mono, c] : terms_) p.terms_.emplace(mono, c * r);
  return p;
}

BiPoly BiPoly::derivative(Var v) const {
  BiPoly p;
  for (const auto& [mono, c] : terms_) {
    if (v == Var::z) {
      if (mono.z > 0) p.add_term({mono.z - 1, mono.zbar}, c * Rational(mono.z));
    } else {
      if (mono.zbar > 0) p.add_term({mono.z, mono.zbar - 1}, c * Rational(mono.zbar));
    }
  }
  return p;
}

BiPoly BiPoly::conjugated() const {
  BiPoly p;
  for (const auto& [mono, c] : terms_) p.terms_.emplace(Monomial{mono.zbar, mono.z}, c);
  return p;
}

std::complex<double> BiPoly::eval(std::complex<double> zv) const {
  const std::complex<double> zc = std::conj(zv);
  const int dz = degree_z();
  const int dzb = degree_zbar();
  std::vector<std::complex<double>> pz(static_cast<std::size_t>(dz) + 1);
  std::vector<std::complex<double>> pzb(static_cast<std::size_t>(dzb) + 1);
  pz[0] = 1.0;
  for (int i = 1; i <= dz; ++i) pz[static_cast<std::size_t>(i)] = pz[static_cast<std::size_t>(i - 1)] * zv;
  pzb[0] = 1.0;
  for (int j = 1; j <= dzb; ++j) pzb[static_cast<std::size_t>(j)] = pzb[static_cast<std::size_t>(j - 1)] * zc;
  std::complex<double> acc = 0.0;
  for (const auto& [mono, c] : terms_)
    acc += c.to_double() * pz[static_cast<std::size_t>(mono.z)] * pzb[static_cast<std::size_t>(mono.zbar)];
  return acc;
}

void BiPoly::add_term(const Monomial& mono, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    const bool has_vars = mono.z > 0 || mono.zbar > 0;
    if (!has_vars || mag != Rational(1)) {
      out << mag.to_string();
      if (has_vars) out << "*";
    }
    if (mono.z > 0) {
      out << "z";
      if (mono.z > 1) out << "^" << mono.z;
      if (mono.zbar > 0) out << "*";
    }
    if (mono.zbar > 0) {
      out << "zbar";
      if (mono.zbar > 1) out << "^" << mono.zbar;
    }
  }
  return out.str();
}

BiPoly weight_base(const Rational& kappa) {
  BiPoly p = BiPoly::constant(Rational(1));
  p.add_term({1, 1}, kappa);
  return p;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return monomial(0, c); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
  if (k < 0) throw Error("monomial with negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& r) const {
  if (r.is_zero()) return UniPoly();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= r;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> v(coeffs_.size() - 1, Rational(0));
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BiPoly UniPoly::eval_at(const BiPoly& x) const {
  BiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc.add_term({0, 0}, *it);
  }
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (k == 0 || mag != Rational(1)) {
      out << mag.to_string();
      if (k > 0) out << "*";
    }
    if (k > 0) {
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace twistlap
