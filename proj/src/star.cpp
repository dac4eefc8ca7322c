#include "zkq/star.hpp"

#include "zkq/errors.hpp"

namespace zkq {

namespace {

Rational falling(int x, int m) {
  Rational r(1);
  for (int t = 0; t < m; ++t) r *= Rational(x - t);
  return r;
}

Rational binomial(int n, int r) {
  Rational v(1);
  for (int t = 0; t < r; ++t) v *= Rational(n - t, t + 1);
  return v;
}

Rational factorial(int n) {
  Rational r(1);
  for (int t = 2; t <= n; ++t) r *= Rational(t);
  return r;
}

// B_n for constant Poisson coefficient c, evaluated monomial pair by
// monomial pair through the closed-form coefficient.
LaurentPoly moyal_bn(const LaurentPoly& f, const LaurentPoly& g, int n, const Rational& c) {
  if (n == 0) return f * g;
  LaurentPoly out;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      if (mf.i + mg.i < n) continue;  // every summand hits a vanishing u-factor
      Rational a = monomial_star_coefficient(n, mf.l, mf.i, mg.l, mg.i, c);
      if (a.is_zero()) continue;
      out.add_term(mf.l + mg.l - n, mf.i + mg.i - n, cf * cg * a);
    }
  }
  return out;
}

// Order-2 term of the second-order star product for polynomial sigma:
//   (1/2) s^2 (f_zz g_uu - 2 f_zu g_zu + f_uu g_zz)
// + (1/3) s s_z (f_uu g_z - f_zu g_u) + (1/3) s s_u (f_zz g_u - f_zu g_z)
// + (1/3) s s_z (f_z g_uu - f_u g_zu) + (1/3) s s_u (f_u g_zz - f_z g_zu)
// - (1/6) (s_u^2 f_z g_z - s_z s_u (f_z g_u + f_u g_z) + s_z^2 f_u g_u).
LaurentPoly kontsevich_b2(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& s) {
  LaurentPoly sz = s.dz(), su = s.du();
  LaurentPoly fz = f.dz(), fu = f.du();
  LaurentPoly gz = g.dz(), gu = g.du();
  LaurentPoly fzz = fz.dz(), fzu = fz.du(), fuu = fu.du();
  LaurentPoly gzz = gz.dz(), gzu = gz.du(), guu = gu.du();

  Rational half(1, 2), third(1, 3), sixth(1, 6);
  LaurentPoly s2 = s * s;
  LaurentPoly t1 = (s2 * (fzz * guu - fzu * gzu - fzu * gzu + fuu * gzz)).scaled(half);
  LaurentPoly t2 =
      ((s * sz) * (fuu * gz - fzu * gu) + (s * su) * (fzz * gu - fzu * gz)).scaled(third);
  LaurentPoly t3 =
      ((s * sz) * (fz * guu - fu * gzu) + (s * su) * (fu * gzz - fz * gzu)).scaled(third);
  LaurentPoly t4 = ((su * su) * (fz * gz) - (sz * su) * (fz * gu + fu * gz) +
                    (sz * sz) * (fu * gu)).scaled(-sixth);
  return t1 + t2 + t3 + t4;
}

// The engines below take the coefficient function of the chart they run on:
// sigma_U for first-chart products, sigma_V for second-chart ones (where the
// (l, i) slots carry (xi, v)-exponents throughout).
using BnFn = LaurentPoly (*)(const LaurentPoly&, const LaurentPoly&, int, const LaurentPoly&);

LaurentPoly bn_moyal(const LaurentPoly& f, const LaurentPoly& g, int n, const LaurentPoly& s) {
  return moyal_bn(f, g, n, s.constant_value());
}

LaurentPoly bn_kontsevich(const LaurentPoly& f, const LaurentPoly& g, int n,
                          const LaurentPoly& s) {
  switch (n) {
    case 0: return f * g;
    case 1: return s * (f.dz() * g.du() - f.du() * g.dz());
    case 2: return kontsevich_b2(f, g, s);
    default: throw std::logic_error("kontsevich2: order above 2");
  }
}

HbarSeries star_with(BnFn bn, const LaurentPoly& s, const HbarSeries& f,
                     const HbarSeries& g, int order) {
  HbarSeries out;
  for (int a = 0; a <= f.order() && a <= order; ++a) {
    if (f.coeff(a).is_zero()) continue;
    for (int b = 0; b <= g.order() && a + b <= order; ++b) {
      if (g.coeff(b).is_zero()) continue;
      for (int n = 0; a + b + n <= order; ++n)
        out.add_coeff(a + b + n, bn(f.coeff(a), g.coeff(b), n, s));
    }
  }
  return out;
}

}  // namespace

Rational monomial_star_coefficient(int n, int l1, int i1, int l2, int i2, const Rational& c) {
  if (n < 0) fail(errc::invalid_argument, "monomial_star_coefficient: negative order");
  if (n == 0) return Rational(1);
  Rational sum(0);
  for (int r = 0; r <= n; ++r) {
    if (r > i1 || n - r > i2) continue;  // falling factorial on a u-exponent vanished
    Rational term = binomial(n, r) * falling(l1, n - r) * falling(i1, r) * falling(l2, r) *
                    falling(i2, n - r);
    if (r % 2) term = -term;
    sum += term;
  }
  return sum * c.pow(n) / factorial(n);
}

HbarSeries moyal_star(const HbarSeries& f, const HbarSeries& g, const Rational& c, int order) {
  return star_with(&bn_moyal, LaurentPoly::constant(c), f, g, order);
}

HbarSeries kontsevich2_star(const HbarSeries& f, const HbarSeries& g,
                            const PoissonStructure& sigma, int order) {
  if (sigma.is_constant()) return star_with(&bn_moyal, sigma.sigma_u(), f, g, order);
  if (order > 2)
    fail(errc::invalid_argument,
         "kontsevich2_star: non-constant sigma is only available up to order 2");
  return star_with(&bn_kontsevich, sigma.sigma_u(), f, g, order);
}

StarContext StarContext::make(PoissonStructure sigma, int order) {
  if (order < 0) fail(errc::invalid_argument, "StarContext: negative order");
  StarEngine engine = sigma.is_constant() ? StarEngine::moyal_constant
                                          : StarEngine::kontsevich_order2;
  if (engine == StarEngine::kontsevich_order2 && order > 2)
    fail(errc::invalid_argument,
         "StarContext: non-constant sigma supports truncation order <= 2");
  Chart side = Chart::U;
  if (!is_tangent_to_fiber(sigma) && !sigma.sigma_u().is_zero() && sigma.sigma_u().min_z() >= 1)
    side = Chart::V;
  return StarContext{std::move(sigma), order, engine, side};
}

HbarSeries star(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g) {
  if (ctx.engine == StarEngine::moyal_constant)
    return star_with(&bn_moyal, ctx.sigma.sigma_u(), f, g, ctx.order);
  return star_with(&bn_kontsevich, ctx.sigma.sigma_u(), f, g, ctx.order);
}

HbarSeries star_on_chart(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g,
                         Chart chart) {
  if (chart == Chart::U || chart == Chart::UV) return star(ctx, f, g);
  HbarSeries fu = f, gu = g;
  if (chart == Chart::V) {
    fu = HbarSeries();
    gu = HbarSeries();
    for (int n = 0; n <= f.order(); ++n) fu.set_coeff(n, to_u_chart(f.coeff(n), ctx.k()));
    for (int n = 0; n <= g.order(); ++n) gu.set_coeff(n, to_u_chart(g.coeff(n), ctx.k()));
  }
  HbarSeries prod = star(ctx, fu, gu);
  if (chart == Chart::V) {
    HbarSeries out;
    for (int n = 0; n <= prod.order(); ++n) out.set_coeff(n, to_v_chart(prod.coeff(n), ctx.k()));
    for (int n = 0; n <= out.order(); ++n) {
      std::vector<Mono> bad;
      // V-chart data: (l, i) slots hold (xi, v)-exponents, so holomorphy on V
      // is the U-style sign condition on the stored exponents.
      if (!chart_member(out.coeff(n), Chart::U, ctx.k(), &bad))
        fail(errc::chart_violation, "star_on_chart: product left the V chart at order " +
                                        std::to_string(n));
    }
    return out;
  }
  for (int n = 0; n <= prod.order(); ++n)
    if (!chart_member(prod.coeff(n), Chart::Global, ctx.k()))
      fail(errc::chart_violation,
           "star_on_chart: product left the global functions at order " + std::to_string(n));
  return prod;
}

namespace {

// Order-by-order Global membership scan; fills the witness on failure.
bool scan_global(const HbarSeries& prod, int k, ClosureReport* rep) {
  for (int n = 0; n <= prod.order(); ++n) {
    std::vector<Mono> bad;
    if (!chart_member(prod.coeff(n), Chart::Global, k, &bad)) {
      rep->closed = false;
      rep->order = n;
      rep->witness = bad.front();
      rep->coeff = prod.coeff(n).coeff(bad.front().l, bad.front().i);
      return false;
    }
  }
  return true;
}

// The same bidifferential expansion run on the second chart: inputs are
// rewritten to (xi, v), the coefficient function is sigma_V, and the result
// is rewritten back. Constant sigma_V runs at any order, polynomial sigma_V
// up to order 2 (the context's order cap already enforces this).
HbarSeries star_via_second_chart(const StarContext& ctx, const HbarSeries& f,
                                 const HbarSeries& g) {
  const LaurentPoly& sv = ctx.sigma.sigma_v();
  if (!sv.is_constant() && ctx.order > 2)
    fail(errc::invalid_argument, "second-chart product: polynomial sigma_V capped at order 2");
  HbarSeries fv, gv;
  for (int n = 0; n <= f.order(); ++n) fv.set_coeff(n, to_other_chart(f.coeff(n), ctx.k()));
  for (int n = 0; n <= g.order(); ++n) gv.set_coeff(n, to_other_chart(g.coeff(n), ctx.k()));
  HbarSeries prod = sv.is_constant() ? star_with(&bn_moyal, sv, fv, gv, ctx.order)
                                     : star_with(&bn_kontsevich, sv, fv, gv, ctx.order);
  HbarSeries out;
  for (int n = 0; n <= prod.order(); ++n) out.set_coeff(n, to_other_chart(prod.coeff(n), ctx.k()));
  return out;
}

}  // namespace

ClosureReport closure_check(const StarContext& ctx, const HbarSeries& f, const HbarSeries& g) {
  HbarSeries prod =
      ctx.global_side == Chart::V ? star_via_second_chart(ctx, f, g) : star(ctx, f, g);
  ClosureReport rep;
  rep.side = ctx.global_side;
  scan_global(prod, ctx.k(), &rep);
  return rep;
}

HbarSeries star_inverse(const StarContext& ctx, const HbarSeries& f) {
  auto unit = f.classical_limit().single_term();
  if (!unit || unit->first.i != 0)
    fail(errc::non_unit_classical_limit,
         "star_inverse: classical limit must be a single monomial c z^l");
  LaurentPoly g0 = LaurentPoly::mono(-unit->first.l, 0, unit->second.inverse());
  HbarSeries g(g0);
  for (int n = 1; n <= ctx.order; ++n) {
    LaurentPoly resid = star(ctx, f, g).coeff(n);
    g.set_coeff(n, (resid * g0).scaled(Rational(-1)));
  }
  HbarSeries right = star(ctx, f, g), left = star(ctx, g, f);
  if (!(right == HbarSeries::one() && left == HbarSeries::one()))
    throw std::logic_error("star_inverse: inverse verification failed");
  return g;
}

}  // namespace zkq
