#include "zkq/cohomology.hpp"

#include "zkq/errors.hpp"

namespace zkq {

H0Presentation h0_generators(int k, int twist) {
  if (k < 1) fail(errc::invalid_argument, "h0_generators: k must be >= 1");
  H0Presentation p;
  p.twist = twist;
  if (twist >= 0) {
    p.q = 0;
    p.nu = twist;
  } else {
    // smallest q with q*k >= -twist, then nu = q*k + twist
    p.q = (-twist + k - 1) / k;
    p.nu = p.q * k + twist;
  }
  for (int a = 0; a <= p.nu; ++a) p.generators.push_back(LaurentPoly::mono(a, p.q, 1));
  p.relation_count = static_cast<long>(p.nu) * k;
  return p;
}

bool h0_relations_check(int k, int twist) {
  H0Presentation p = h0_generators(k, twist);
  // Relations: gen_a x_{b-1} - gen_{a-1} x_b for 1 <= a <= nu, 1 <= b <= k,
  // with x_m = z^m u.
  for (int a = 1; a <= p.nu; ++a) {
    for (int b = 1; b <= k; ++b) {
      LaurentPoly rel = p.generators[a] * LaurentPoly::mono(b - 1, 1, 1) -
                        p.generators[a - 1] * LaurentPoly::mono(b, 1, 1);
      if (!rel.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Mono> h0_monomial_basis(int k, int twist, int ucut) {
  if (k < 1 || ucut < 0) fail(errc::invalid_argument, "h0_monomial_basis: bad k or ucut");
  std::vector<Mono> out;
  for (int i = 0; i <= ucut; ++i) {
    int hi = k * i + twist;
    for (int l = 0; l <= hi; ++l) out.push_back(Mono{i, l});
  }
  return out;
}

}  // namespace zkq
