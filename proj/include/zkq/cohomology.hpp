#pragma once

#include <vector>

#include "zkq/laurent.hpp"

namespace zkq {

// Presentation of H^0(Z_k, O(twist)) as a module over the invariant ring
// R = C[x_0..x_k] / (x_a x_{b+1} - x_{a+1} x_b), with x_a realized as z^a u.
//
// twist >= 0: generators z^a for 0 <= a <= twist, twist*k relations.
// twist < 0:  write -twist = q k - nu with 0 <= nu < k; generators z^a u^q
//             for 0 <= a <= nu, nu*k relations.
struct H0Presentation {
  int twist = 0;
  int q = 0;   // u-power of the generators (0 when twist >= 0)
  int nu = 0;  // top z-power of the generators (twist when twist >= 0)
  std::vector<LaurentPoly> generators;
  long relation_count = 0;
};

H0Presentation h0_generators(int k, int twist);

// Verifies the presentation's relations vanish identically under x_a = z^a u.
bool h0_relations_check(int k, int twist);

// Monomial basis of H^0(Z_k, O(twist)) truncated at u-degree ucut:
// { z^l u^i : 0 <= i <= ucut, 0 <= l <= k i + twist }, canonical (i, l) order.
std::vector<Mono> h0_monomial_basis(int k, int twist, int ucut);

}  // namespace zkq
