#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zkq/laurent.hpp"

namespace zkq {

// Classical rank-2 transition data (z^j, p; 0, z^-j) on the surface of degree k.
struct BundleData {
  int k = 1;
  int j = 0;
  LaurentPoly p;
};

// Explicit truncation window for the cochain computations.  Each computation
// shapes it to its own geometry: width uses z in [max(z_lo,0), z_hi] and
// u in [-e, e] with e = max(-u_lo, u_hi); height uses z in [-w, w] with
// w = max(-z_lo, z_hi) and u in [0, u_hi].  Passing a window disables the
// automatic growth-until-stable loop.
struct CechWindow {
  int z_lo = 0, z_hi = 0, u_lo = 0, u_hi = 0;
};

// dim coker(H^0(Z, E) -> H^0(Z minus zero-section, E)): sections that exist off
// the zero section but do not extend.  Computed on windows grown until stable,
// or on the explicit window when one is given.
int width(const BundleData& bd, const std::optional<CechWindow>& win = {});

// dim H^1(Z, E) from Cech cochains on the two-chart cover, windows grown until
// stable, or taken from the explicit window when one is given.
int height(const BundleData& bd, const std::optional<CechWindow>& win = {});

struct ChargeBreakdown {
  int width = 0;
  int height = 0;
  int epsilon = 0;  // 1 for k >= 2, else 0
  int total = 0;    // width + height + epsilon
};

ChargeBreakdown charge(const BundleData& bd, const std::optional<CechWindow>& win = {});

struct ChargeTableRow {
  std::string label;  // extension-class monomial p
  LaurentPoly p;
  int width = 0;
  int height = 0;
  int charge = 0;
};

// Reference invariants for the standard list of extension monomials at
// k = 1, j = 3.  Values are the published ones; two rows (zu^3, z^2u^3) are
// flagged because the published triple breaks charge = width + height there.
std::vector<ChargeTableRow> reference_charge_table();

// Rows of reference_charge_table() whose published values violate the
// additivity identity; kept separate so reports can call them out.
bool reference_row_is_additive(const ChargeTableRow& row);

}  // namespace zkq
