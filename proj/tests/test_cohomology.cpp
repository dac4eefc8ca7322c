#include "doctest.h"
#include "zkq/cohomology.hpp"
#include "zkq/errors.hpp"
#include "zkq/parse.hpp"
#include "zkq/poisson.hpp"

using namespace zkq;

TEST_CASE("section-module generators") {
  auto p = h0_generators(2, 3);
  CHECK(p.q == 0);
  CHECK(p.nu == 3);
  REQUIRE(p.generators.size() == 4);
  for (int a = 0; a <= 3; ++a) CHECK(p.generators[a] == LaurentPoly::mono(a, 0, 1));
  CHECK(p.relation_count == 6);

  p = h0_generators(2, -3);
  CHECK(p.q == 2);
  CHECK(p.nu == 1);
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0] == parse_poly("u^2"));
  CHECK(p.generators[1] == parse_poly("z u^2"));
  CHECK(p.relation_count == 2);

  p = h0_generators(1, 0);
  CHECK(p.generators.size() == 1);
  CHECK(p.generators[0] == parse_poly("1"));
  CHECK(p.relation_count == 0);

  p = h0_generators(3, -3);  // -3 = -1*3 + 0
  CHECK(p.q == 1);
  CHECK(p.nu == 0);
  REQUIRE(p.generators.size() == 1);
  CHECK(p.generators[0] == parse_poly("u"));
  CHECK(p.relation_count == 0);

  CHECK_THROWS_AS(h0_generators(0, 1), DomainError);
}

TEST_CASE("relations vanish under the invariant-ring substitution") {
  CHECK(h0_relations_check(1, 2));
  CHECK(h0_relations_check(3, -3));
  for (int k = 1; k <= 4; ++k)
    for (int twist = -5; twist <= 5; ++twist) CHECK(h0_relations_check(k, twist));

  // negative control: shifting one index breaks the identity
  auto p = h0_generators(2, 3);
  LaurentPoly corrupted =
      p.generators[1] * LaurentPoly::mono(1, 1, 1) - p.generators[0] * LaurentPoly::mono(1, 1, 1);
  CHECK(!corrupted.is_zero());
}

TEST_CASE("monomial bases") {
  auto b = h0_monomial_basis(1, 1, 1);
  REQUIRE(b.size() == 5);
  CHECK(b == std::vector<Mono>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}});

  CHECK(h0_monomial_basis(2, -3, 2) == std::vector<Mono>{{2, 0}, {2, 1}});
  CHECK(h0_monomial_basis(3, -1, 1) == std::vector<Mono>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(h0_monomial_basis(1, -3, 1).empty());
  CHECK_THROWS_AS(h0_monomial_basis(1, 0, -1), DomainError);
}

TEST_CASE("every basis monomial is a module multiple of a generator") {
  for (int k = 1; k <= 4; ++k) {
    for (int twist = -6; twist <= 6; ++twist) {
      auto pres = h0_generators(k, twist);
      for (const Mono& m : h0_monomial_basis(k, twist, 5)) {
        // need z^l u^i = z^a u^q * product of i-q monomials x_b = z^b u,
        // i.e. some a in [0, nu] with 0 <= l - a <= k (i - q)
        bool ok = false;
        for (int a = 0; a <= pres.nu && !ok; ++a)
          ok = m.i >= pres.q && m.l - a >= 0 && m.l - a <= k * (m.i - pres.q);
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("basis count matches the Poisson-dimension enumeration") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 5; ++n) {
      auto dim = poisson_dim_on_neighborhood(k, n, UDegreeConvention::at_most_n);
      CHECK(static_cast<long>(h0_monomial_basis(k, 2 - k, n).size()) == dim.enumerated);
    }
}
