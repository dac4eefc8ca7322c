#include "zkq/bundles.hpp"

#include <algorithm>

#include "zkq/errors.hpp"
#include "zkq/linalg.hpp"

namespace zkq {

SplitH1 split_h1(const LaurentPoly& h, int j1, int j2, int k) {
  SplitH1 out;
  for (const auto& [m, c] : h.terms()) {
    if (m.l - j2 >= 0) {
      out.x_u.add_term(m.l - j2, m.i, c);
    } else if (m.l - j1 <= k * m.i) {
      out.x_v.add_term(m.l - j1, m.i, c);
    } else {
      out.obstruction.push_back(m);
    }
  }
  return out;
}

LineBundleNormalization line_bundle_normalize(const StarContext& ctx, const HbarSeries& f) {
  auto unit = f.classical_limit().single_term();
  if (!unit || unit->first.i != 0)
    fail(errc::non_unit_classical_limit,
         "line_bundle_normalize: classical limit must be a single monomial c z^l");
  Rational c = unit->second;
  LineBundleNormalization out;
  out.j = -unit->first.l;
  out.normal = HbarSeries(LaurentPoly::mono(unit->first.l, 0, 1));
  out.gauge_u = HbarSeries(LaurentPoly::constant(c.inverse()));
  out.gauge_v = HbarSeries::one();

  for (int n = 1; n <= ctx.order; ++n) {
    HbarSeries g = star(ctx, star(ctx, out.gauge_v, f), out.gauge_u);
    LaurentPoly sn = g.coeff(n);
    if (sn.is_zero()) continue;
    // Correct with gauge_u += x h^n, gauge_v += y h^n where
    // c x + y = -z^j S_n, split into U- and V-holomorphic halves.
    LaurentPoly h = -sn.shifted(out.j, 0);
    SplitH1 sp = split_h1(h, 0, 0, ctx.k());
    if (!sp.obstruction.empty())
      throw std::logic_error("line_bundle_normalize: unsplittable correction");
    out.gauge_u.add_coeff(n, sp.x_u.scaled(c.inverse()));
    out.gauge_v.add_coeff(n, sp.x_v);
  }
  HbarSeries g = star(ctx, star(ctx, out.gauge_v, f), out.gauge_u);
  if (!(g == out.normal))
    throw std::logic_error("line_bundle_normalize: replay mismatch");
  return out;
}

FiltrationReduction filtration_reduce(const StarContext& ctx, const StarMatrix2& t) {
  if (!t.e[1][0].classical_limit().is_zero())
    fail(errc::not_classically_filtered,
         "filtration_reduce: classical lower-left entry must vanish");
  auto d0 = t.e[0][0].classical_limit().single_term();
  auto d1 = t.e[1][1].classical_limit().single_term();
  if (!d0 || !d1 || d0->first.i != 0 || d1->first.i != 0)
    fail(errc::not_classically_filtered,
         "filtration_reduce: diagonal classical limits must be monomials c z^l");
  int j1 = d0->first.l, j2 = d1->first.l;

  FiltrationReduction out;
  out.reduced = t;
  out.gauge_u = StarMatrix2::identity();
  out.gauge_v = StarMatrix2::identity();

  auto normalize_diagonals = [&] {
    StarMatrix2 dv = StarMatrix2::identity(), du = StarMatrix2::identity();
    bool any = false;
    const int jr[2] = {j1, j2};
    for (int r = 0; r < 2; ++r) {
      HbarSeries target(LaurentPoly::mono(jr[r], 0, 1));
      if (out.reduced.e[r][r] == target) continue;
      LineBundleNormalization nrm = line_bundle_normalize(ctx, out.reduced.e[r][r]);
      dv.e[r][r] = nrm.gauge_v;
      du.e[r][r] = nrm.gauge_u;
      any = true;
    }
    if (!any) return;
    out.reduced = star_mul(ctx, dv, star_mul(ctx, out.reduced, du));
    out.gauge_v = star_mul(ctx, dv, out.gauge_v);
    out.gauge_u = star_mul(ctx, out.gauge_u, du);
  };

  normalize_diagonals();
  int guard = 0;
  while (!out.reduced.e[1][0].is_zero()) {
    if (++guard > ctx.order + 1)
      throw std::logic_error("filtration_reduce: no progress clearing lower-left entry");
    int n = 0;
    while (out.reduced.e[1][0].coeff(n).is_zero()) ++n;
    LaurentPoly cn = out.reduced.e[1][0].coeff(n);
    SplitH1 sp = split_h1(-cn, j1, j2, ctx.k());
    if (!sp.obstruction.empty())
      fail(errc::h1_obstruction,
           "filtration_reduce: correction blocked by H1(O(" + std::to_string(j1 - j2) + "))");
    StarMatrix2 lv = StarMatrix2::identity(), ru = StarMatrix2::identity();
    lv.e[1][0].set_coeff(n, sp.x_v);
    ru.e[1][0].set_coeff(n, sp.x_u);
    out.reduced = star_mul(ctx, lv, star_mul(ctx, out.reduced, ru));
    out.gauge_v = star_mul(ctx, lv, out.gauge_v);
    out.gauge_u = star_mul(ctx, out.gauge_u, ru);
    if (!out.reduced.e[1][0].coeff(n).is_zero())
      throw std::logic_error("filtration_reduce: clearing step failed");
    normalize_diagonals();
  }

  StarMatrix2 replay = star_mul(ctx, out.gauge_v, star_mul(ctx, t, out.gauge_u));
  if (!(replay == out.reduced))
    throw std::logic_error("filtration_reduce: replay mismatch");
  return out;
}

ExtWindow ext_window(int k, int j) {
  if (k < 1) fail(errc::invalid_argument, "ext_window: k must be >= 1");
  if (j < 1) fail(errc::window_empty, "ext_window: empty window for j < 1");
  return ExtWindow{k, j, (2 * j - 2) / k};
}

std::vector<Mono> ExtWindow::monomials() const {
  std::vector<Mono> out;
  for (int i = 0; i <= imax; ++i)
    for (int l = k * i - j + 1; l <= j - 1; ++l) out.push_back(Mono{i, l});
  return out;
}

ExtReduction ext_reduce(const StarContext& ctx, int j, const HbarSeries& p) {
  ExtWindow w = ext_window(ctx.k(), j);
  HbarSeries zj(LaurentPoly::mono(j, 0, 1)), zmj(LaurentPoly::mono(-j, 0, 1));
  ExtReduction out;

  auto current = [&] {
    return p + star(ctx, out.beta_v, zmj) - star(ctx, zj, out.b_u);
  };

  for (int n = 0; n <= ctx.order; ++n) {
    LaurentPoly r = current().coeff(n);
    for (const auto& [m, c] : r.terms()) {
      if (w.contains(m)) continue;
      if (m.l >= j) {
        out.b_u.add_coeff(n, LaurentPoly::mono(m.l - j, m.i, c));
      } else if (m.l <= ctx.k() * m.i - j) {
        out.beta_v.add_coeff(n, LaurentPoly::mono(m.l + j, m.i, -c));
      } else {
        throw std::logic_error("ext_reduce: monomial escaped the absorption bands");
      }
    }
    LaurentPoly check = current().coeff(n);
    for (const auto& [m, c] : check.terms())
      if (!w.contains(m)) throw std::logic_error("ext_reduce: residual left the window");
  }
  out.p_reduced = current();
  return out;
}

StarMatrix2 canonical_transition(int j, const HbarSeries& p) {
  StarMatrix2 t;
  t.e[0][0] = HbarSeries(LaurentPoly::mono(j, 0, 1));
  t.e[0][1] = p;
  t.e[1][1] = HbarSeries(LaurentPoly::mono(-j, 0, 1));
  return t;
}

namespace {

// h^0 of the u = 0 restriction twisted by O(t): count polynomial section
// vectors s (degrees <= dmax) with no positive z-powers left in z^(-t) T s.
std::size_t restricted_h0(const std::array<std::array<LaurentPoly, 2>, 2>& t, int tw, int dmax) {
  int lo = std::min({t[0][0].min_z(), t[0][1].min_z(), t[1][0].min_z(), t[1][1].min_z(), 0});
  int hi = std::max({t[0][0].max_z(), t[0][1].max_z(), t[1][0].max_z(), t[1][1].max_z(), 0});
  (void)lo;
  int emax = hi + dmax - tw;  // largest z-exponent reachable in a constraint row
  std::size_t unknowns = 2 * (dmax + 1);
  std::vector<std::vector<Rational>> rows;
  // Row for each (component r, exponent e >= 1) pair of z^(-t) (T s).
  for (int r = 0; r < 2; ++r) {
    for (int e = 1; e <= emax; ++e) {
      std::vector<Rational> row(unknowns);
      bool nonzero = false;
      for (int c = 0; c < 2; ++c) {
        for (const auto& [m, coef] : t[r][c].terms()) {
          int d = e + tw - m.l;  // needed monomial degree of s_c
          if (d < 0 || d > dmax) continue;
          row[c * (dmax + 1) + d] += coef;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  RatMatrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m.at(r, c) = rows[r][c];
  return unknowns - m.rank();
}

}  // namespace

std::pair<int, int> restriction_splitting_type(const StarMatrix2& t0) {
  std::array<std::array<LaurentPoly, 2>, 2> t;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) t[r][c] = t0.e[r][c].classical_limit().restrict_u0();

  LaurentPoly det = t[0][0] * t[1][1] - t[0][1] * t[1][0];
  auto dm = det.single_term();
  if (!dm || dm->first.i != 0)
    fail(errc::non_invertible_classical_limit,
         "restriction_splitting_type: determinant must be a monomial unit c z^d");
  int d = dm->first.l;

  int b = 1;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      b = std::max({b, std::abs(t[r][c].min_z()), std::abs(t[r][c].max_z())});

  auto h0 = [&](int tw) {
    int dmax = 2 * b + std::abs(tw) + 2;
    std::size_t v = restricted_h0(t, tw, dmax);
    if (restricted_h0(t, tw, dmax + 3) != v)
      throw std::logic_error("restriction_splitting_type: section count did not stabilize");
    return v;
  };

  int j1 = 0;
  bool found = false;
  for (int tw = -(b + 1); tw <= b + 2; ++tw) {
    if (h0(tw) > 0) {
      j1 = -tw;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("restriction_splitting_type: no sections found in range");
  int j2 = -j1 - d;
  for (int tw = -j1; tw <= -j1 + 3; ++tw) {
    std::size_t expect = static_cast<std::size_t>(std::max(0, j1 + tw + 1)) +
                         static_cast<std::size_t>(std::max(0, j2 + tw + 1));
    if (h0(tw) != expect)
      throw std::logic_error("restriction_splitting_type: section counts off the split profile");
  }
  return {j1, j2};
}

bool is_instanton(int k, std::pair<int, int> splitting) {
  if (k < 1) fail(errc::invalid_argument, "is_instanton: k must be >= 1");
  return splitting.first % k == 0;
}

}  // namespace zkq
