#include <random>

#include "doctest.h"
#include "zkq/errors.hpp"
#include "zkq/parse.hpp"
#include "zkq/poisson.hpp"

using namespace zkq;

TEST_CASE("generator lists by surface degree") {
  auto g1 = poisson_generators(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0] == parse_poly("1"));
  CHECK(g1[1] == parse_poly("z"));

  auto g2 = poisson_generators(2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == parse_poly("1"));

  for (int k = 3; k <= 6; ++k) {
    auto g = poisson_generators(k);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == parse_poly("u"));
    CHECK(g[1] == parse_poly("z u"));
    CHECK(g[2] == parse_poly("z^2 u"));
  }

  CHECK_THROWS_AS(poisson_generators(0), DomainError);
}

TEST_CASE("second-chart component") {
  // sigma_V = -z^(k-2) sigma_U rewritten in (xi, v)
  PoissonStructure s1(1, parse_poly("1"));
  CHECK(s1.sigma_v() == parse_poly("-z"));  // -z^-1 -> -xi, stored in (l,i) slots

  PoissonStructure s1z(1, parse_poly("z"));
  CHECK(s1z.sigma_v() == parse_poly("-1"));

  PoissonStructure s2(2, parse_poly("1"));
  CHECK(s2.sigma_v() == parse_poly("-1"));

  PoissonStructure s3(3, parse_poly("u"));
  CHECK(s3.sigma_v() == parse_poly("-z^2 u"));  // -xi^2 v

  PoissonStructure s3c(3, parse_poly("z^2 u"));
  CHECK(s3c.sigma_v() == parse_poly("-u"));  // -v
}

TEST_CASE("structures whose second chart fails holomorphy are rejected") {
  CHECK_NOTHROW(PoissonStructure(2, parse_poly("1")));
  CHECK_THROWS_AS(PoissonStructure(2, parse_poly("z")), DomainError);
  CHECK_THROWS_AS(PoissonStructure(3, parse_poly("1")), DomainError);
  CHECK_THROWS_AS(PoissonStructure(3, parse_poly("z^3 u")), DomainError);
  try {
    PoissonStructure(2, parse_poly("z"));
  } catch (const DomainError& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
  // sigma_U itself must be U-holomorphic
  CHECK_THROWS_AS(PoissonStructure(1, parse_poly("z^-1")), DomainError);
}

TEST_CASE("tangency to the fiber divisor") {
  CHECK(is_tangent_to_fiber(PoissonStructure(1, parse_poly("1"))));       // -xi
  CHECK(!is_tangent_to_fiber(PoissonStructure(1, parse_poly("z"))));      // -1
  CHECK(!is_tangent_to_fiber(PoissonStructure(2, parse_poly("1"))));      // -1
  CHECK(is_tangent_to_fiber(PoissonStructure(3, parse_poly("u"))));       // -xi^2 v
  CHECK(is_tangent_to_fiber(PoissonStructure(3, parse_poly("z u"))));     // -xi v
  CHECK(!is_tangent_to_fiber(PoissonStructure(3, parse_poly("z^2 u"))));  // -v
}

TEST_CASE("degeneracy classes") {
  auto d = degeneracy_class(PoissonStructure(3, parse_poly("u + z u")));
  CHECK(d.contains_zero_section);
  CHECK(d.contains_fiber);

  d = degeneracy_class(PoissonStructure(1, parse_poly("1")));
  CHECK(!d.contains_zero_section);
  CHECK(d.contains_fiber);

  d = degeneracy_class(PoissonStructure(1, parse_poly("z")));
  CHECK(!d.contains_zero_section);
  CHECK(!d.contains_fiber);
}

TEST_CASE("bracket values and algebraic laws") {
  PoissonStructure one(1, parse_poly("1"));
  PoissonStructure su(1, parse_poly("u"));

  CHECK(poisson_bracket(parse_poly("z"), parse_poly("u"), one) == parse_poly("1"));
  CHECK(poisson_bracket(parse_poly("z"), parse_poly("u"), su) == parse_poly("u"));
  CHECK(poisson_bracket(parse_poly("u"), parse_poly("z u"), one) == parse_poly("-u"));

  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dl(-2, 3), di(0, 3), dc(-3, 3);
  auto rand_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 3; ++t) p.add_term(dl(rng), di(rng), Rational(dc(rng)));
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly f = rand_poly(), g = rand_poly(), h = rand_poly();
    for (const auto* s : {&one, &su}) {
      // antisymmetry
      CHECK(poisson_bracket(f, g, *s) == -poisson_bracket(g, f, *s));
      // Leibniz in the second slot
      CHECK(poisson_bracket(f, g * h, *s) ==
            poisson_bracket(f, g, *s) * h + g * poisson_bracket(f, h, *s));
      // Jacobi (automatic for bivectors on a surface; guards the implementation)
      LaurentPoly jac = poisson_bracket(f, poisson_bracket(g, h, *s), *s) +
                        poisson_bracket(g, poisson_bracket(h, f, *s), *s) +
                        poisson_bracket(h, poisson_bracket(f, g, *s), *s);
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("bracket is coordinate-invariant across the chart transition") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dl(-2, 2), di(0, 3), dc(-3, 3);
  std::vector<PoissonStructure> structs;
  structs.emplace_back(1, parse_poly("1"));
  structs.emplace_back(1, parse_poly("z"));
  structs.emplace_back(2, parse_poly("1"));
  structs.emplace_back(3, parse_poly("u + 2 z^2 u"));
  for (const auto& s : structs) {
    for (int trial = 0; trial < 15; ++trial) {
      LaurentPoly f, g;
      for (int t = 0; t < 3; ++t) {
        f.add_term(dl(rng), di(rng), Rational(dc(rng)));
        g.add_term(dl(rng), di(rng), Rational(dc(rng)));
      }
      LaurentPoly lhs = to_other_chart(poisson_bracket(f, g, s, Chart::UV), s.k());
      LaurentPoly rhs = poisson_bracket(to_other_chart(f, s.k()), to_other_chart(g, s.k()), s,
                                        Chart::V);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("global-chart bracket checks its output") {
  PoissonStructure one(1, parse_poly("1"));
  CHECK(poisson_bracket(parse_poly("u"), parse_poly("z u"), one, Chart::Global) ==
        parse_poly("-u"));
  // {z^2, u} = 2z leaves the global functions of Z_1
  CHECK_THROWS_AS(poisson_bracket(parse_poly("z^2"), parse_poly("u"), one, Chart::Global),
                  DomainError);
}

TEST_CASE("dimension of structures on infinitesimal neighborhoods") {
  for (int n = 0; n <= 6; ++n) {
    auto r1 = poisson_dim_on_neighborhood(1, n, UDegreeConvention::at_most_n);
    CHECK(r1.matches);
    CHECK(r1.enumerated == static_cast<long>(n + 1) * (n + 4) / 2);

    auto r2 = poisson_dim_on_neighborhood(2, n, UDegreeConvention::at_most_n_minus_1);
    CHECK(r2.matches);
    CHECK(r2.enumerated == static_cast<long>(n) * n);
  }

  // for degree >= 3 the published closed form undercounts the enumeration
  auto r3 = poisson_dim_on_neighborhood(3, 3, UDegreeConvention::at_most_n);
  CHECK(r3.enumerated == 18);
  CHECK(r3.closed_form == 15);
  CHECK(!r3.matches);

  CHECK_THROWS_AS(poisson_dim_on_neighborhood(0, 1, UDegreeConvention::at_most_n), DomainError);
  CHECK_THROWS_AS(poisson_dim_on_neighborhood(1, -1, UDegreeConvention::at_most_n), DomainError);
}
