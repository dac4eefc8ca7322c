#pragma once

#include <vector>

#include "zkq/laurent.hpp"

namespace zkq {

// Holomorphic Poisson structure on Z_k, stored by its first-chart component
// sigma_U (a polynomial in z, u). The second-chart component is determined:
//   sigma_V = (-z^(k-2) sigma_U) rewritten in (xi, v),
// and validity requires sigma_V to be holomorphic there (xi-exponents >= 0).
class PoissonStructure {
 public:
  PoissonStructure(int k, LaurentPoly sigma_u);

  int k() const { return k_; }
  const LaurentPoly& sigma_u() const { return sigma_u_; }
  // (xi, v)-exponents stored in the (l, i) slots.
  const LaurentPoly& sigma_v() const { return sigma_v_; }

  bool is_constant() const { return sigma_u_.is_constant(); }

 private:
  int k_;
  LaurentPoly sigma_u_;
  LaurentPoly sigma_v_;
};

// Generators of the space of Poisson structures over the global functions:
// k=1: {1, z};  k=2: {1};  k>=3: {u, zu, z^2 u}.
std::vector<LaurentPoly> poisson_generators(int k);

// Tangency to the quantization divisor {xi = 0}: every sigma_V term must
// carry a positive xi-exponent. Degenerate iff sigma vanishes there.
bool is_tangent_to_fiber(const PoissonStructure& s);

struct DegeneracyClass {
  bool contains_zero_section;  // sigma_U is a multiple of u
  bool contains_fiber;         // tangent to {xi = 0}
};
DegeneracyClass degeneracy_class(const PoissonStructure& s);

// {f, g} = sigma (df/dz dg/du - df/du dg/dz) on U-side charts; the V chart
// uses sigma_V with inputs read as (xi, v)-polynomials. Chart::Global
// computes on U and asserts the result is global again.
LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const PoissonStructure& s, Chart chart = Chart::UV);

enum class UDegreeConvention { at_most_n, at_most_n_minus_1 };

struct PoissonDimResult {
  long enumerated;      // monomial count, the ground truth
  long closed_form;     // published closed-form value for this k, n
  bool matches;         // enumerated == closed_form
};

// Dimension of Poisson structures supported on the n-th infinitesimal
// neighbourhood of the zero section, by direct monomial enumeration with the
// chosen u-degree convention. The closed forms disagree with enumeration for
// k >= 3 under either convention; callers surface `matches == false` as a
// warning rather than reconciling silently.
PoissonDimResult poisson_dim_on_neighborhood(int k, int n, UDegreeConvention conv);

}  // namespace zkq
