#include "zkq/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

#include "zkq/errors.hpp"
#include "zkq/linalg.hpp"

namespace zkq {

namespace {

int max_window_multiplier() {
  if (const char* s = std::getenv("ZKQ_MAX_WINDOW")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 4;
}

// Evaluates f on windows scaled by 1, 2, 4, ... and accepts the first value
// repeated on consecutive scales.  A cap of 1 trusts the base window.
int stabilize(const std::function<int(int)>& f, const char* what) {
  int cap = max_window_multiplier();
  int prev = f(1);
  if (cap == 1) return prev;
  for (int m = 2; m <= cap; m *= 2) {
    int cur = f(m);
    if (cur == prev) return cur;
    prev = cur;
  }
  fail(errc::non_stabilized,
       std::string(what) + ": value kept changing up to window multiplier " +
           std::to_string(cap) + " (raise ZKQ_MAX_WINDOW)");
}

void check_bundle(const BundleData& bd) {
  if (bd.k < 1) fail(errc::invalid_argument, "bundle data: k must be >= 1");
  if (bd.j < 0) fail(errc::invalid_argument, "bundle data: j must be >= 0");
}

// --- width -----------------------------------------------------------------
//
// Sections of E over the complement of the zero section live in a window with
// u-powers of both signs; sections over all of Z need u-powers >= 0.  Both are
// cut out by the same condition: every monomial z^l u^i of T s with l > k i
// must cancel.  The cokernel dimension is the difference of the two kernel
// dimensions.

int width_at(const BundleData& bd, int zhi, int uext) {
  const int k = bd.k, j = bd.j;
  const int zspan = zhi + 1;

  const int n_pos = 2 * zspan * (uext + 1);
  const int n_all = 2 * zspan * (2 * uext + 1);

  // Unknowns s_r[(l, i)], 0 <= l <= zhi, -uext <= i <= uext; the i >= 0 block
  // gets the low indices so restricting to it is a prefix truncation.
  auto idx = [&](int r, int l, int i) {
    if (i >= 0) return ((i * zspan) + l) * 2 + r;
    return n_pos + (((-i - 1) * zspan) + l) * 2 + r;
  };
  auto have = [&](int l, int i) { return l >= 0 && l <= zhi && i >= -uext && i <= uext; };

  int pmin = 0, pmax = 0, pumax = 0;
  if (!bd.p.is_zero()) {
    pmin = bd.p.min_z();
    pmax = bd.p.max_z();
    pumax = bd.p.max_u();
  }

  std::vector<SparseVec> rows;
  // Component 1 of T s: z^j s_1 + p s_2.
  {
    int llo = std::min(j, pmin), lhi = std::max(j + zhi, pmax + zhi);
    for (int i = -uext; i <= uext + pumax; ++i) {
      for (int l = llo; l <= lhi; ++l) {
        if (l <= k * i) continue;
        SparseVec row;
        if (have(l - j, i)) row.emplace_back(idx(0, l - j, i), Rational(1));
        for (const auto& [m, c] : bd.p.terms())
          if (have(l - m.l, i - m.i)) row.emplace_back(idx(1, l - m.l, i - m.i), c);
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
    }
  }
  // Component 2 of T s: z^-j s_2; kills s_2[(l, i)] whenever l - j > k i.
  for (int i = -uext; i <= uext; ++i)
    for (int l = 0; l <= zhi; ++l)
      if (l - j > k * i) rows.push_back({{idx(1, l, i), Rational(1)}});

  SparseEliminator full, pos;
  for (const auto& row : rows) {
    full.add(row);
    SparseVec trunc;
    for (const auto& e : row)
      if (e.first < n_pos) trunc.push_back(e);
    if (!trunc.empty()) pos.add(std::move(trunc));
  }
  int ker_all = n_all - static_cast<int>(full.rank());
  int ker_pos = n_pos - static_cast<int>(pos.rank());
  return ker_all - ker_pos;
}

// --- height ----------------------------------------------------------------
//
// One-cochains on the chart overlap, in the frame of the first chart, modulo
// coboundaries: sections over U enter directly, sections over V enter through
// the inverse transition (z^-j, -p; 0, z^j).  The quotient is evaluated on a
// window W inside a padded ambient A: dim(B intersect W) = rank(G) - rank(G
// with the W-coordinates dropped), where G collects every coboundary
// generator whose support stays inside A.

int height_at(const BundleData& bd, int zw, int uw) {
  const int k = bd.k, j = bd.j;

  std::vector<int> zoff = {j};
  int pumax = 0;
  for (const auto& [m, c] : bd.p.terms()) {
    zoff.push_back(m.l);
    pumax = std::max(pumax, m.i);
  }
  const int pad_z = *std::max_element(zoff.begin(), zoff.end()) -
                    *std::min_element(zoff.begin(), zoff.end());
  const int az_lo = -zw - pad_z - j, az_hi = zw + pad_z + j;
  const int au_hi = uw + pumax;

  auto in_a = [&](int l, int i) { return l >= az_lo && l <= az_hi && i >= 0 && i <= au_hi; };
  auto in_w = [&](int l, int i) { return l >= -zw && l <= zw && i >= 0 && i <= uw; };

  // Coordinates of A, the complement of W first.
  std::map<std::tuple<int, int, int>, int> index;
  for (int pass = 0; pass < 2; ++pass)
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i <= au_hi; ++i)
        for (int l = az_lo; l <= az_hi; ++l)
          if ((pass == 1) == in_w(l, i)) index.emplace(std::make_tuple(r, l, i), index.size());
  const int dim_w = 2 * (2 * zw + 1) * (uw + 1);
  const int n_outside = static_cast<int>(index.size()) - dim_w;

  std::vector<SparseVec> gens;
  for (int i = 0; i <= au_hi; ++i) {
    for (int l = az_lo; l <= az_hi; ++l) {
      // U-side sections: single monomials with l >= 0, both components.
      if (l >= 0)
        for (int r = 0; r < 2; ++r) gens.push_back({{index.at({r, l, i}), Rational(1)}});
      // V-side sections in the first component map to z^(l-j) u^i.
      if (l <= k * i && in_a(l - j, i)) gens.push_back({{index.at({0, l - j, i}), Rational(1)}});
      // V-side sections in the second component map to (-p z^l u^i, z^(l+j) u^i).
      if (l <= k * i) {
        SparseVec g;
        bool inside = in_a(l + j, i);
        if (inside) g.emplace_back(index.at({1, l + j, i}), Rational(1));
        for (const auto& [m, c] : bd.p.terms()) {
          if (!inside) break;
          if (!in_a(l + m.l, i + m.i)) {
            inside = false;
            break;
          }
          g.emplace_back(index.at({0, l + m.l, i + m.i}), -c);
        }
        if (inside) {
          std::sort(g.begin(), g.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          SparseVec merged;
          for (auto& e : g) {
            if (!merged.empty() && merged.back().first == e.first)
              merged.back().second += e.second;
            else
              merged.push_back(e);
          }
          merged.erase(std::remove_if(merged.begin(), merged.end(),
                                      [](const auto& e) { return e.second.is_zero(); }),
                       merged.end());
          if (!merged.empty()) gens.push_back(std::move(merged));
        }
      }
    }
  }

  SparseEliminator full, outside;
  for (const auto& g : gens) {
    full.add(g);
    SparseVec trunc;
    for (const auto& e : g)
      if (e.first < n_outside) trunc.push_back(e);
    if (!trunc.empty()) outside.add(std::move(trunc));
  }
  int dim_b_in_w = static_cast<int>(full.rank()) - static_cast<int>(outside.rank());
  return dim_w - dim_b_in_w;
}

}  // namespace

int width(const BundleData& bd, const std::optional<CechWindow>& win) {
  check_bundle(bd);
  if (win) {
    const int zhi = std::max(win->z_hi, 0);
    const int uext = std::max({-win->u_lo, win->u_hi, 0});
    return width_at(bd, zhi, uext);
  }
  const int zhi = 2 * bd.j + bd.k + 2, uext = bd.j + 2;
  return stabilize([&](int m) { return width_at(bd, m * zhi, m * uext); }, "width");
}

int height(const BundleData& bd, const std::optional<CechWindow>& win) {
  check_bundle(bd);
  if (win) {
    const int zw = std::max({-win->z_lo, win->z_hi, 0});
    const int uw = std::max(win->u_hi, 0);
    return height_at(bd, zw, uw);
  }
  const int zw = 2 * bd.j + bd.k + 2, uw = bd.j + 2;
  return stabilize([&](int m) { return height_at(bd, m * zw, m * uw); }, "height");
}

ChargeBreakdown charge(const BundleData& bd, const std::optional<CechWindow>& win) {
  ChargeBreakdown out;
  out.width = width(bd, win);
  out.height = height(bd, win);
  out.epsilon = bd.k >= 2 ? 1 : 0;
  out.total = out.width + out.height + out.epsilon;
  return out;
}

std::vector<ChargeTableRow> reference_charge_table() {
  auto mono = [](int l, int i) { return LaurentPoly::mono(l, i, 1); };
  return {
      {"z^-1u", mono(-1, 1), 3, 2, 5},
      {"u", mono(0, 1), 1, 2, 3},
      {"zu", mono(1, 1), 1, 2, 3},
      {"z^2u", mono(2, 1), 3, 2, 5},
      {"u^2", mono(0, 2), 3, 3, 6},
      {"zu^2", mono(1, 2), 2, 3, 5},
      {"z^2u^2", mono(2, 2), 3, 3, 6},
      {"zu^3", mono(1, 3), 5, 3, 7},
      {"z^2u^3", mono(2, 3), 5, 3, 7},
      {"z^2u^4", mono(2, 4), 5, 3, 8},
      {"0", LaurentPoly::zero(), 6, 3, 9},
  };
}

bool reference_row_is_additive(const ChargeTableRow& row) {
  return row.width + row.height == row.charge;  // k = 1, so epsilon = 0
}

}  // namespace zkq
