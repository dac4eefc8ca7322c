#pragma once

#include <utility>
#include <vector>

#include "zkq/star_matrix.hpp"

namespace zkq {

// Splits h = z^j2 x_u + z^j1 x_v with x_u holomorphic on U and x_v on V.
// Monomials assignable to either side go to the U side. Monomials fitting
// neither side are returned as the obstruction (a cocycle in H^1(O(j1-j2)),
// possible only when j1 - j2 <= -2).
struct SplitH1 {
  LaurentPoly x_u;
  LaurentPoly x_v;
  std::vector<Mono> obstruction;
};
SplitH1 split_h1(const LaurentPoly& h, int j1, int j2, int k);

// Two-sided unit gauge bringing a series with invertible monomial classical
// limit back to that classical monomial: a_v * f * a_u = classical(f)|_monic.
// The returned witness replays exactly.
struct LineBundleNormalization {
  int j = 0;             // normal form z^(-j)
  HbarSeries normal;     // the series z^(-j)
  HbarSeries gauge_u;    // right factor, U-holomorphic corrections
  HbarSeries gauge_v;    // left factor, V-holomorphic corrections
};
LineBundleNormalization line_bundle_normalize(const StarContext& ctx, const HbarSeries& f);

// Clears the lower-left entry of a 2x2 matrix whose classical limit is
// upper-triangular with monomial diagonal, renormalizing the diagonal to
// exact powers of z afterwards. Witness matrices replay:
//   gauge_v * T * gauge_u = reduced.
struct FiltrationReduction {
  StarMatrix2 reduced;
  StarMatrix2 gauge_u;
  StarMatrix2 gauge_v;
};
FiltrationReduction filtration_reduce(const StarContext& ctx, const StarMatrix2& t);

// Canonical extension-class window W(k, j):
//   0 <= i <= floor((2j-2)/k),  k i - j + 1 <= l <= j - 1.
struct ExtWindow {
  int k = 1, j = 1;
  int imax = 0;
  bool contains(Mono m) const {
    return m.i >= 0 && m.i <= imax && m.l >= k * m.i - j + 1 && m.l <= j - 1;
  }
  std::vector<Mono> monomials() const;
};
ExtWindow ext_window(int k, int j);

// Order-by-order reduction of an extension-class series into W(k, j):
//   p + beta * z^(-j) = p_reduced + z^j * b,
// with b holomorphic on U and beta on V; star corrections from lower orders
// feed forward. The witness pair replays through the matrix identity
//   (1, beta; 0, 1) * T_p * (1, -b; 0, 1) = T_{p_reduced}.
struct ExtReduction {
  HbarSeries p_reduced;
  HbarSeries b_u;
  HbarSeries beta_v;
};
ExtReduction ext_reduce(const StarContext& ctx, int j, const HbarSeries& p);

// Transition matrix (z^j, p; 0, z^-j) as a classical star matrix.
StarMatrix2 canonical_transition(int j, const HbarSeries& p);

// Splitting type (j1, j2), j1 >= j2, of the rank-2 bundle on the zero-section
// P^1 cut out by restricting a classical 2x2 transition matrix to u = 0.
// Computed from exact section counts of twists of the restricted bundle.
std::pair<int, int> restriction_splitting_type(const StarMatrix2& t0);

bool is_instanton(int k, std::pair<int, int> splitting);

}  // namespace zkq
