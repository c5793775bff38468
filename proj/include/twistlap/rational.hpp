#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace twistlap {

// Exact arbitrary-precision rational. Always reduced, denominator > 0.
// The coefficient field for every polynomial and parameter in the library.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): scalars mix freely
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Accepts "p", "-p", "p/q" with decimal digits only (no floats).
  static Rational parse(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  bool is_zero() const { return sign() == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_integer() const;
  Rational abs() const;
  Rational inverse() const;   // throws on zero
  Rational pow(long e) const; // throws on 0^negative
  mpz_class floor() const;
  // Greatest integer strictly below this value (floor for non-integers).
  mpz_class floor_strict() const;
  long to_long() const;       // requires an integer fitting in long
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// Rising factorial (a)_k = a (a+1) ... (a+k-1); empty product is 1.
Rational pochhammer(const Rational& a, long k);

Rational factorial(long k);

// Generalized binomial C(v, k) = v(v-1)...(v-k+1)/k! for rational v.
Rational generalized_binomial(const Rational& v, long k);

}  // namespace twistlap
