#include "doctest.h"
#include "zkq/rational.hpp"

using zkq::Rational;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.numerator_str() == "1");
  CHECK(a.denominator_str() == "2");

  Rational b(-3, 6);
  CHECK(b == Rational(-1, 2));
  CHECK(a + b == Rational(0));
  CHECK((a + b).is_zero());

  // negative denominators normalize to positive
  Rational c(1, -3);
  CHECK(c == Rational(-1, 3));
  CHECK(c.sign() == -1);
}

TEST_CASE("rational field operations") {
  Rational a(3, 7), b(2, 5);
  CHECK(a * b == Rational(6, 35));
  CHECK(a / b == Rational(15, 14));
  CHECK(a - b == Rational(1, 35));
  CHECK(-a == Rational(-3, 7));
  CHECK(a.inverse() == Rational(7, 3));
  CHECK(a.abs() == a);
  CHECK((-a).abs() == a);

  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational powers") {
  Rational a(2, 3);
  CHECK(a.pow(0) == Rational(1));
  CHECK(a.pow(3) == Rational(8, 27));
  CHECK(a.pow(-2) == Rational(9, 4));
  CHECK(Rational(0).pow(2) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::from_string("2/4") == Rational(1, 2));
  CHECK(Rational::from_string("-6") == Rational(-6));
  CHECK(Rational::from_string("-6").str() == "-6");
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 2).is_integer());
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 2) > Rational(3));
}
