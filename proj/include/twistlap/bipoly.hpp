#pragma once

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "twistlap/rational.hpp"

namespace twistlap {

enum class Var { z, zbar };

struct Monomial {
  int z = 0;
  int zbar = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Bivariate polynomial in z and zbar over the rationals. Terms are kept in a
// map ordered by (z power, zbar power); zero coefficients are never stored.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly monomial(int i, int j, const Rational& c);
  static BiPoly variable(Var v);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  int degree_z() const;
  int degree_zbar() const;
  int total_degree() const;  // 0 for the zero polynomial
  Rational max_abs_coeff() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  BiPoly scaled(const Rational& r) const;
  BiPoly derivative(Var v) const;
  // Complex conjugation: coefficients are real, so it swaps the exponents.
  BiPoly conjugated() const;

  std::complex<double> eval(std::complex<double> zv) const;

  // Adds c * z^i zbar^j into the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& mono, const Rational& c);

  std::string to_string() const;

 private:
  TermMap terms_;
};

// 1 + kappa * z * zbar
BiPoly weight_base(const Rational& kappa);

// Univariate polynomial over the rationals, ascending coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int k, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly scaled(const Rational& r) const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  // Horner composition with a bivariate argument.
  BiPoly eval_at(const BiPoly& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace twistlap
