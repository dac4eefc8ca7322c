#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zkq/laurent.hpp"
#include "zkq/linalg.hpp"
#include "zkq/poisson.hpp"
#include "zkq/rational.hpp"

namespace zkq {

// A point of the first-order moduli window: projective coefficient vector
// (w_0, ..., w_{m-1}) over the monomials z^(k-j+1+t) u, with m = 2j - k - 1.
struct ModuliPoint {
  int k = 1;
  int j = 2;
  std::vector<Rational> w;

  int m() const { return static_cast<int>(w.size()); }
};

// m = 2j - k - 1; throws WindowEmpty when the window has no slots (k > 2j-2).
int moduli_window_size(int k, int j);

// Validates sizes and the not-all-zero invariant.
ModuliPoint make_moduli_point(int k, int j, std::vector<Rational> w);

// sum_t w_t z^(k-j+1+t) u
LaurentPoly extension_poly(const ModuliPoint& p);

int leading_zeros(const ModuliPoint& p);

// Upper-triangular Toeplitz matrix with first row (w_0, ..., w_{m-1}).
RatMatrix toeplitz_matrix(const ModuliPoint& p);

// Number of leading zero coefficients; asserted equal to the corank of the
// Toeplitz matrix.
int fiber_dimension(const ModuliPoint& p);

// The all-but-last-zero point (0,...,0,1) is dropped from the stratification
// when the bundle it corresponds to has charge exceeding j.
bool is_excluded_endpoint(const ModuliPoint& p);

struct Stratum {
  int index = 0;      // number of leading zeros
  int fiber_dim = 0;  // equals index
  std::string pattern;
};

struct Stratification {
  int m = 0;
  std::vector<Stratum> strata;
  bool endpoint_excluded = false;
  int endpoint_charge = 0;  // meaningful when m >= 2
};

Stratification stratify(int k, int j);

// 0 when the degeneracy divisor of sigma misses the zero section, else the
// fiber dimension at p. Requires sigma tangent to the fiber and nonzero.
int rebel_level(const ModuliPoint& p, const PoissonStructure& sigma);

// --- independent gauge-equivalence oracle -----------------------------------
//
// Assembles the order-hbar (1,2)-entry of  T_(p+p'h) * G * Rinv_(p+q'h)  with
// symbolic gauge unknowns a1(z), d1(z), c0(z), c1(z), a'(z), d'(z) and decides
// reachability questions by exact elimination. deg_bound < 0 selects the
// default 2j+k+2; every answer is recomputed at deg_bound+2 and must agree.

struct EquivalenceResult {
  bool equivalent = false;
  // gauge assignment realizing the equivalence (free unknowns at zero)
  std::vector<std::pair<std::string, Rational>> witness;
};

EquivalenceResult equivalence_oracle(const ModuliPoint& p,
                                     const std::vector<Rational>& p_prime,
                                     const std::vector<Rational>& q_prime,
                                     const PoissonStructure& sigma, int deg_bound = -1);

// m minus the dimension of the reachable subspace of first-order directions;
// independent of the Toeplitz shortcut.
int fiber_dimension_oracle(const ModuliPoint& p, const PoissonStructure& sigma,
                           int deg_bound = -1);

}  // namespace zkq
