#include <doctest.h>

#include "twistlap/errors.hpp"
#include "twistlap/rational.hpp"

using namespace twistlap;

TEST_CASE("rationals are always reduced with positive denominator") {
  CHECK(Rational(-8, 12) == Rational(-2, 3));
  CHECK(Rational(3, -4) == Rational(-3, 4));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-8, 12).to_string() == "-2/3");
  CHECK(Rational(6, 3).to_string() == "2");
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "-7", "3/4", "-22/7", "123456789012345678901/2"}) {
    CHECK(Rational::parse(s).to_string() == s);
  }
}

TEST_CASE("parse rejects anything but p or p/q") {
  for (const char* s : {"", "3.5", "3/-4", "/4", "4/", "1e3", "4/0", "a", "1 2", "+3"}) {
    CHECK_THROWS_AS(Rational::parse(s), ParseError);
  }
}

TEST_CASE("exact field arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("floor and strict floor") {
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(5, 2).floor_strict() == 2);
  CHECK(Rational(3).floor_strict() == 2);
  CHECK(Rational(-2).floor_strict() == -3);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-3), 5) == Rational(0));
  CHECK(pochhammer(Rational(2), 3) == Rational(24));
}

TEST_CASE("generalized binomial") {
  CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
  CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(generalized_binomial(Rational(-1), 3) == Rational(-1));
  CHECK(generalized_binomial(Rational(3), 5) == Rational(0));
  CHECK(factorial(5) == Rational(120));
}
