#include "twistlap/rational.hpp"

#include <cctype>
#include <utility>

#include "twistlap/errors.hpp"

namespace twistlap {

Rational::Rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  // Shape: [-]digits[/digits], nothing else.
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++num_digits;
  }
  if (num_digits == 0) throw ParseError("bad rational: '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("bad rational: '" + text + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size())
      throw ParseError("bad rational: '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
  if (mpz_sgn(v.get_den().get_mpz_t()) == 0)
    throw ParseError("rational with zero denominator: '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::is_integer() const {
  return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw Error("zero to a negative power");
    return Rational(0);
  }
  const Rational base = e < 0 ? inverse() : *this;
  const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), ue);
  return Rational(mpq_class(num) / mpq_class(den));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::floor_strict() const {
  mpz_class f = floor();
  if (is_integer()) f -= 1;
  return f;
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("to_long on non-integer " + to_string());
  if (!v_.get_num().fits_slong_p()) throw Error("integer too large for long");
  return v_.get_num().get_si();
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw Error("pochhammer with negative length");
  Rational acc(1);
  Rational term = a;
  for (long i = 0; i < k; ++i) {
    acc *= term;
    if (acc.is_zero()) return acc;
    term += Rational(1);
  }
  return acc;
}

Rational factorial(long k) {
  if (k < 0) throw Error("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(mpq_class(f));
}

Rational generalized_binomial(const Rational& v, long k) {
  if (k < 0) throw Error("binomial with negative lower index");
  // C(v, k) = (v-k+1)_k / k!
  return pochhammer(v - Rational(k) + Rational(1), k) / factorial(k);
}

}  // namespace twistlap
