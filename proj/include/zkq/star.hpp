#pragma once

#include <optional>

#include "zkq/poisson.hpp"
#include "zkq/series.hpp"

namespace zkq {

// Coefficient of the Moyal bidifferential operator on a monomial pair:
// B_n(z^l1 u^i1, z^l2 u^i2) = a_n z^(l1+l2-n) u^(i1+i2-n) with
//   a_n = (c^n / n!) sum_r (-1)^r C(n,r) (l1)_(n-r) (i1)_r (l2)_r (i2)_(n-r),
// falling factorials (x)_m = x(x-1)...(x-m+1), c the constant Poisson
// coefficient. Zero factors terminate terms early.
Rational monomial_star_coefficient(int n, int l1, int i1, int l2, int i2, const Rational& c);

// Moyal product for a constant Poisson coefficient c, truncated at h^order.
HbarSeries moyal_star(const HbarSeries& f, const HbarSeries& g, const Rational& c, int order);

// Second-order star product for a polynomial (not necessarily constant)
// Poisson structure. Orders above 2 are available only when sigma is
// constant (where it coincides with the Moyal product).
HbarSeries kontsevich2_star(const HbarSeries& f, const HbarSeries& g,
                            const PoissonStructure& sigma, int order);

enum class StarEngine { moyal_constant, kontsevich_order2 };

// A chosen surface, Poisson structure, truncation order, and engine. The
// factory picks the Moyal engine for constant sigma (valid at any order) and
// the second-order engine otherwise (order <= 2 enforced).
//
// global_side records the chart whose expansion can close on the global
// functions: U when sigma is tangent to the complement of the first chart,
// else V when it is tangent to the complement of the second (sigma_U a
// multiple of z), else U by default (no closure guarantee either way).
struct StarContext {
  PoissonStructure sigma;
  int order;
  StarEngine engine;
  Chart global_side = Chart::U;

  static StarContext make(PoissonStructure sigma, int order);
  int k() const { return sigma.k(); }
};

HbarSeries star(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g);

// Star product of functions presented on a chart. U/UV compute directly; V
// converts to (z, u), multiplies, and converts back ((xi, v)-exponents ride
// in the (l, i) slots). For V and Global the result is checked to stay in
// the chart's ring; a failure raises ChartViolation (possible only for
// non-closing sigma).
HbarSeries star_on_chart(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g,
                         Chart chart);

struct ClosureReport {
  bool closed = true;
  Chart side = Chart::U;   // chart whose expansion was checked
  int order = -1;          // h-order of the first violation
  Mono witness{};          // violating monomial
  Rational coeff{0};       // its coefficient
};

// Checks that f * g stays inside the global functions order by order. The
// expansion is run on the context's global_side: closure is a property of a
// single product map, so the certifying chart is fixed per Poisson structure
// (by tangency), never chosen per input pair. Witnesses are reported in
// (z, u)-exponents.
ClosureReport closure_check(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g);

// Two-sided star inverse of a series whose classical limit is a single
// monomial c z^l (the units of the UV chart ring); NonUnitClassicalLimit
// otherwise. Built order by order and verified on both sides.
HbarSeries star_inverse(const StarContext& ctx, const HbarSeries& f);

}  // namespace zkq
