#include "zkq/poisson.hpp"

#include "zkq/errors.hpp"

namespace zkq {

PoissonStructure::PoissonStructure(int k, LaurentPoly sigma_u)
    : k_(k), sigma_u_(std::move(sigma_u)) {
  if (k_ < 1) fail(errc::invalid_argument, "PoissonStructure: k must be >= 1");
  if (!chart_member(sigma_u_, Chart::U, k_))
    fail(errc::invalid_argument, "PoissonStructure: sigma_U must be holomorphic on U");
  sigma_v_ = to_other_chart(sigma_u_.shifted(k_ - 2, 0), k_).scaled(Rational(-1));
  for (const auto& [m, c] : sigma_v_.terms())
    if (m.l < 0)
      fail(errc::invalid_argument,
           "PoissonStructure: sigma_V fails V-holomorphy (negative xi-exponent)");
}

std::vector<LaurentPoly> poisson_generators(int k) {
  if (k < 1) fail(errc::invalid_argument, "poisson_generators: k must be >= 1");
  if (k == 1) return {LaurentPoly::constant(1), LaurentPoly::mono(1, 0, 1)};
  if (k == 2) return {LaurentPoly::constant(1)};
  return {LaurentPoly::mono(0, 1, 1), LaurentPoly::mono(1, 1, 1), LaurentPoly::mono(2, 1, 1)};
}

bool is_tangent_to_fiber(const PoissonStructure& s) {
  for (const auto& [m, c] : s.sigma_v().terms())
    if (m.l < 1) return false;
  return true;
}

DegeneracyClass degeneracy_class(const PoissonStructure& s) {
  bool zero_section = true;
  for (const auto& [m, c] : s.sigma_u().terms())
    if (m.i < 1) zero_section = false;
  return DegeneracyClass{zero_section, is_tangent_to_fiber(s)};
}

LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g,
                            const PoissonStructure& s, Chart chart) {
  const LaurentPoly& sig = (chart == Chart::V) ? s.sigma_v() : s.sigma_u();
  LaurentPoly b = sig * (f.dz() * g.du() - f.du() * g.dz());
  if (chart == Chart::Global) {
    std::vector<Mono> bad;
    if (!chart_member(b, Chart::Global, s.k(), &bad))
      fail(errc::chart_violation, "poisson_bracket: result left the global functions");
  }
  return b;
}

PoissonDimResult poisson_dim_on_neighborhood(int k, int n, UDegreeConvention conv) {
  if (k < 1 || n < 0) fail(errc::invalid_argument, "poisson_dim_on_neighborhood: bad k or n");
  int imax = (conv == UDegreeConvention::at_most_n) ? n : n - 1;
  long count = 0;
  // Monomials z^l u^i of sigma_U with 0 <= l <= k(i-1)+2 (both charts
  // holomorphic), u-degree capped by the convention.
  for (int i = 0; i <= imax; ++i) {
    int hi = k * (i - 1) + 2;
    if (hi >= 0) count += hi + 1;
  }
  long closed = 0;
  if (k == 1)
    closed = static_cast<long>(n + 1) * (n + 4) / 2;
  else if (k == 2)
    closed = static_cast<long>(n) * n;
  else
    closed = static_cast<long>(n) * ((n - 1) * k + 4) / 2;
  return PoissonDimResult{count, closed, count == closed};
}

}  // namespace zkq
