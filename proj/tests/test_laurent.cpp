#include <random>
#include <vector>

#include "doctest.h"
#include "zkq/laurent.hpp"

using namespace zkq;

namespace {
LaurentPoly m(int l, int i, long c = 1) { return LaurentPoly::mono(l, i, Rational(c)); }
}  // namespace

TEST_CASE("term merging and cancellation") {
  LaurentPoly p = m(2, 1, 3) + m(2, 1, -3);
  CHECK(p.is_zero());
  CHECK(p.num_terms() == 0);

  LaurentPoly q = m(-1, 0) + m(-1, 2) + m(-1, 0);
  CHECK(q.num_terms() == 2);
  CHECK(q.coeff(-1, 0) == Rational(2));
  CHECK(q.coeff(-1, 2) == Rational(1));
  CHECK(q.coeff(5, 5) == Rational(0));
}

TEST_CASE("product of polynomials") {
  // (z + u)(z - u) = z^2 - u^2
  LaurentPoly p = (m(1, 0) + m(0, 1)) * (m(1, 0) - m(0, 1));
  CHECK(p == m(2, 0) - m(0, 2));

  // Laurent part: z^-2 u * z^3 = z u
  CHECK(m(-2, 1) * m(3, 0) == m(1, 1));
}

TEST_CASE("shift guards the u-exponent floor") {
  LaurentPoly p = m(0, 1) + m(2, 3);
  CHECK(p.shifted(1, 1) == m(1, 2) + m(3, 4));
  CHECK(p.shifted(-4, 0) == m(-4, 1) + m(-2, 3));
  CHECK_THROWS(p.shifted(0, -2));  // u-exponent of the first term would be -1
  CHECK_NOTHROW(p.shifted(0, -1));
}

TEST_CASE("derivatives") {
  // d/dz (z^3 u^2 + z^-1) = 3 z^2 u^2 - z^-2
  LaurentPoly p = m(3, 2) + m(-1, 0);
  CHECK(p.dz() == m(2, 2, 3) - m(-2, 0));
  // d/du (z^3 u^2 + z^-1) = 2 z^3 u
  CHECK(p.du() == m(3, 1, 2));
  CHECK(m(0, 0, 7).dz().is_zero());
  CHECK(m(0, 0, 7).du().is_zero());
}

TEST_CASE("constant detection and extraction") {
  CHECK(LaurentPoly::zero().is_constant());
  CHECK(LaurentPoly::constant(Rational(5, 3)).is_constant());
  CHECK(!m(1, 0).is_constant());
  CHECK(LaurentPoly::constant(Rational(5, 3)).constant_value() == Rational(5, 3));
  CHECK(LaurentPoly::zero().constant_value() == Rational(0));
}

TEST_CASE("single_term and restrict_u0") {
  auto st = m(2, 3, -5).single_term();
  REQUIRE(st.has_value());
  CHECK(st->first == Mono{3, 2});  // {i, l}
  CHECK(st->second == Rational(-5));
  CHECK(!(m(1, 0) + m(0, 1)).single_term().has_value());
  CHECK(!LaurentPoly::zero().single_term().has_value());

  LaurentPoly p = m(2, 0) + m(1, 1) + m(-3, 0, 4);
  CHECK(p.restrict_u0() == m(2, 0) + m(-3, 0, 4));
}

TEST_CASE("degree extents") {
  LaurentPoly p = m(-2, 1) + m(3, 0) + m(0, 4);
  CHECK(p.min_z() == -2);
  CHECK(p.max_z() == 3);
  CHECK(p.max_u() == 4);
  CHECK(LaurentPoly::zero().min_z() == 0);
  CHECK(LaurentPoly::zero().max_z() == 0);
  CHECK(LaurentPoly::zero().max_u() == 0);
}

TEST_CASE("chart transition rule and involution") {
  // z^l u^i -> xi^(ki-l) v^i ; for k=2: z^3 u^2 -> xi^1 v^2
  CHECK(to_other_chart(m(3, 2), 2) == m(1, 2));
  // constants are fixed
  CHECK(to_other_chart(m(0, 0, 7), 3) == m(0, 0, 7));
  // z -> xi^-1 for k=1
  CHECK(to_other_chart(m(1, 0), 1) == m(-1, 0));

  // involution on a mixed polynomial, several k
  std::mt19937 rng(20260815);
  std::uniform_int_distribution<int> dl(-4, 4), di(0, 4), dc(-5, 5);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      LaurentPoly p;
      for (int t = 0; t < 6; ++t) p.add_term(dl(rng), di(rng), Rational(dc(rng)));
      CHECK(to_other_chart(to_other_chart(p, k), k) == p);
    }
  }
}

TEST_CASE("transition is a ring map") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dl(-3, 3), di(0, 3), dc(-4, 4);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      LaurentPoly p, q;
      for (int t = 0; t < 4; ++t) {
        p.add_term(dl(rng), di(rng), Rational(dc(rng)));
        q.add_term(dl(rng), di(rng), Rational(dc(rng)));
      }
      CHECK(to_other_chart(p * q, k) == to_other_chart(p, k) * to_other_chart(q, k));
      CHECK(to_other_chart(p + q, k) == to_other_chart(p, k) + to_other_chart(q, k));
    }
  }
}

TEST_CASE("chart membership") {
  LaurentPoly global = m(0, 0) + m(1, 1) + m(2, 1);  // k=2: l <= 2i holds
  CHECK(chart_member(global, Chart::Global, 2));
  CHECK(chart_member(global, Chart::U, 2));
  CHECK(chart_member(global, Chart::V, 2));
  CHECK(chart_member(global, Chart::UV, 2));

  LaurentPoly z = m(1, 0);
  CHECK(chart_member(z, Chart::U, 1));
  CHECK(!chart_member(z, Chart::V, 1));   // l=1 > k*i=0
  CHECK(chart_member(z, Chart::UV, 1));
  CHECK(!chart_member(z, Chart::Global, 1));

  LaurentPoly zinv = m(-1, 0);
  CHECK(!chart_member(zinv, Chart::U, 1));
  CHECK(chart_member(zinv, Chart::V, 1));

  std::vector<Mono> bad;
  CHECK(!chart_member(z + zinv + m(0, 0), Chart::Global, 1, &bad));
  REQUIRE(bad.size() == 2);
  CHECK(bad[0] == Mono{0, -1});
  CHECK(bad[1] == Mono{0, 1});
}

TEST_CASE("membership matches the transition picture") {
  // f is V-holomorphic iff to_other_chart(f, k) has no negative z-exponent.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dl(-4, 6), di(0, 4);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 40; ++trial) {
      LaurentPoly p = m(dl(rng), di(rng));
      bool vmem = chart_member(p, Chart::V, k);
      CHECK(vmem == (to_other_chart(p, k).min_z() >= 0));
    }
  }
}
