#include <random>

#include "doctest.h"
#include "zkq/errors.hpp"
#include "zkq/parse.hpp"

using namespace zkq;

TEST_CASE("monomial expressions") {
  CHECK(parse_poly("z^-1 u^2") == LaurentPoly::mono(-1, 2, 1));
  CHECK(parse_poly("-3 z") == LaurentPoly::mono(1, 0, -3));
  CHECK(parse_poly("1/2") == LaurentPoly::constant(Rational(1, 2)));
  CHECK(parse_poly("z z u") == LaurentPoly::mono(2, 1, 1));  // repeated factors multiply
  CHECK(parse_poly("0").is_zero());
}

TEST_CASE("series with h powers") {
  HbarSeries s = parse_series("1/2 z u + u h^1");
  CHECK(s.order() == 1);
  CHECK(s.coeff(0) == LaurentPoly::mono(1, 1, Rational(1, 2)));
  CHECK(s.coeff(1) == LaurentPoly::mono(0, 1, 1));

  // bare h means h^1; h^0 lands in the classical slot
  CHECK(parse_series("u h") == parse_series("u h^1"));
  CHECK(parse_series("u h^0") == HbarSeries(parse_poly("u")));

  HbarSeries t = parse_series("z^2 - 2 z h^2");
  CHECK(t.order() == 2);
  CHECK(t.coeff(1).is_zero());
  CHECK(t.coeff(2) == LaurentPoly::mono(1, 0, -2));
}

TEST_CASE("parse errors carry 1-based offsets") {
  CHECK_THROWS_AS(parse_poly("z^^2"), ParseError);
  try {
    parse_poly("z^^2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(std::string(e.what()).find("at offset 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("q"), ParseError);
  CHECK_THROWS_AS(parse_poly("u^-1"), ParseError);     // negative u-power
  CHECK_THROWS_AS(parse_poly("z u h"), ParseError);    // h is not a poly token
  CHECK_THROWS_AS(parse_series("h^-1"), ParseError);   // negative h-power
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("canonical printing order") {
  CHECK(to_string(parse_poly("u + z")) == "z + u");
  CHECK(to_string(parse_poly("z^2 u + z^-1")) == "z^-1 + z^2 u");
  CHECK(to_string(LaurentPoly::zero()) == "0");
  CHECK(to_string(parse_poly("-1/2 z + u")) == "-1/2 z + u");
  CHECK(to_string(parse_series("u h + z")) == "z + u h^1");
  CHECK(to_string(parse_series("2 z h^2 - u")) == "-u + 2 z h^2");
}

TEST_CASE("print-parse round trips") {
  const char* samples[] = {
      "z + u", "z^-3 u^2 + 1/7 z", "1", "0", "-u^4",
      "z - z^2 + z^3 u - 5/3 u^2 h + z^-1 h^3",
  };
  for (const char* s : samples) {
    HbarSeries x = parse_series(s);
    CHECK(parse_series(to_string(x)) == x);
    CHECK(to_string(parse_series(to_string(x))) == to_string(x));
  }

  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> dl(-5, 5), di(0, 4), dn(0, 3), dc(-9, 9), dd(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    HbarSeries x;
    for (int t = 0; t < 5; ++t) {
      LaurentPoly term = LaurentPoly::mono(dl(rng), di(rng), Rational(dc(rng), dd(rng)));
      x.add_coeff(dn(rng), term);
    }
    CHECK(parse_series(to_string(x)) == x);
  }
}

TEST_CASE("rational lists") {
  auto v = parse_rational_list("1, -2/3, 0");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rational(1));
  CHECK(v[1] == Rational(-2, 3));
  CHECK(v[2] == Rational(0));
  CHECK(parse_rational_list("").empty());
  CHECK(parse_rational_list("   ").empty());
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
}
