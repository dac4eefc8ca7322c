#include "zkq/moduli.hpp"

#include <algorithm>
#include <stdexcept>

#include "zkq/errors.hpp"
#include "zkq/invariants.hpp"

namespace zkq {

int moduli_window_size(int k, int j) {
  if (k < 1) fail(errc::invalid_argument, "moduli window: k must be >= 1");
  int m = 2 * j - k - 1;
  if (m < 1)
    fail(errc::window_empty, "moduli window: no first-order classes for k > 2j-2");
  return m;
}

ModuliPoint make_moduli_point(int k, int j, std::vector<Rational> w) {
  int m = moduli_window_size(k, j);
  if (static_cast<int>(w.size()) != m)
    fail(errc::invalid_argument,
         "moduli point: expected " + std::to_string(m) + " coefficients");
  bool nonzero = std::any_of(w.begin(), w.end(), [](const Rational& c) { return !c.is_zero(); });
  if (!nonzero) fail(errc::invalid_argument, "moduli point: coefficients all zero");
  return ModuliPoint{k, j, std::move(w)};
}

LaurentPoly extension_poly(const ModuliPoint& p) {
  LaurentPoly out;
  for (int t = 0; t < p.m(); ++t) out.add_term(p.k - p.j + 1 + t, 1, p.w[t]);
  return out;
}

int leading_zeros(const ModuliPoint& p) {
  int t = 0;
  while (t < p.m() && p.w[t].is_zero()) ++t;
  return t;
}

RatMatrix toeplitz_matrix(const ModuliPoint& p) {
  int m = p.m();
  RatMatrix t(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = r; c < m; ++c) t.at(r, c) = p.w[c - r];
  return t;
}

int fiber_dimension(const ModuliPoint& p) {
  int lead = leading_zeros(p);
  int corank = p.m() - static_cast<int>(toeplitz_matrix(p).rank());
  if (lead != corank)
    throw std::logic_error("fiber_dimension: leading zeros differ from Toeplitz corank");
  return lead;
}

namespace {

// Charge of the bundle attached to the endpoint (0,...,0,1), extension
// monomial z^(j-1) u.
int endpoint_charge_value(int k, int j) {
  return charge(BundleData{k, j, LaurentPoly::mono(j - 1, 1, 1)}).total;
}

}  // namespace

bool is_excluded_endpoint(const ModuliPoint& p) {
  if (p.m() < 2 || leading_zeros(p) != p.m() - 1) return false;
  return endpoint_charge_value(p.k, p.j) > p.j;
}

Stratification stratify(int k, int j) {
  int m = moduli_window_size(k, j);
  Stratification out;
  out.m = m;
  if (m >= 2) {
    out.endpoint_charge = endpoint_charge_value(k, j);
    out.endpoint_excluded = out.endpoint_charge > j;
  }
  int top = m - 1;
  if (out.endpoint_excluded) --top;
  for (int t = 0; t <= top; ++t) {
    Stratum s;
    s.index = t;
    s.fiber_dim = t;
    if (t == 0) {
      s.pattern = "w0 != 0";
    } else {
      std::string zeros;
      for (int r = 0; r < t; ++r) zeros += "w" + std::to_string(r) + " = ";
      s.pattern = zeros + "0, w" + std::to_string(t) + " != 0";
    }
    out.strata.push_back(std::move(s));
  }
  return out;
}

int rebel_level(const ModuliPoint& p, const PoissonStructure& sigma) {
  if (sigma.sigma_u().is_zero())
    fail(errc::invalid_argument, "rebel_level: sigma must be nonzero");
  if (!is_tangent_to_fiber(sigma))
    fail(errc::not_quantizable, "rebel_level: sigma is not tangent to the fiber");
  DegeneracyClass dc = degeneracy_class(sigma);
  if (!dc.contains_zero_section) return 0;
  return fiber_dimension(p);
}

// --- oracle ------------------------------------------------------------------

namespace {

struct OracleSystem {
  RatMatrix l;                     // constraint rows x gauge unknowns
  int m = 0;                       // number of first-order direction slots
  int u1_row0 = 0;                 // row index of the z^(k+1) u constraint
  std::vector<std::string> names;  // gauge unknown labels
};

// Order-hbar (1,2)-entry of T * G * Rinv with G = (a + a'h, b'h; c + c'h,
// d + d'h), a = 1 + a1(z) u, d = 1 + d1(z) u, c = c0(z) + c1(z) u, after the
// classical simplifications.  Per gauge unknown the contribution is linear:
//   a1 = z^s u:  -{z^j, a1} p + 2 {z^j, p} a1 - {z^j a1, p}
//   d1 = z^s u:   {p, d1} z^j + {p d1, z^j}
//   c  = w:       2 z^-j {z^j, p} p w - {p w, p}
//   a' = z^s:    -z^j p z^s        d' = z^s:  +z^j p z^s
// and the first-order directions enter as +z^j (p' - q').  The unknown-free
// part 2{z^j,p} - {z^j,p} - {z^j,p} cancels; rows are the coefficients of
// z^1..z^(2j-1) (checked identically zero) and z^(k+1) u..z^(2j-1) u.
OracleSystem assemble_oracle(const ModuliPoint& p, const PoissonStructure& sigma, int deg) {
  const int j = p.j, k = p.k, m = p.m();
  const LaurentPoly pp = extension_poly(p);
  const LaurentPoly zj = LaurentPoly::mono(j, 0, 1);
  const LaurentPoly zmj = LaurentPoly::mono(-j, 0, 1);
  auto br = [&](const LaurentPoly& f, const LaurentPoly& g) {
    return poisson_bracket(f, g, sigma, Chart::UV);
  };

  LaurentPoly constant = br(zj, pp).scaled(2) - br(zj, pp) - br(zj, pp);
  if (!constant.is_zero())
    throw std::logic_error("oracle: unknown-free part failed to cancel");

  std::vector<LaurentPoly> cols;
  std::vector<std::string> names;
  for (int s = 0; s <= deg; ++s) {
    LaurentPoly x = LaurentPoly::mono(s, 1, 1);
    cols.push_back(-(br(zj, x) * pp) + br(zj, pp).scaled(2) * x - br(zj * x, pp));
    names.push_back("a1_" + std::to_string(s));
  }
  for (int s = 0; s <= deg; ++s) {
    LaurentPoly y = LaurentPoly::mono(s, 1, 1);
    cols.push_back(br(pp, y) * zj + br(pp * y, zj));
    names.push_back("d1_" + std::to_string(s));
  }
  for (int s = 0; s <= 2 * j; ++s) {
    LaurentPoly w = LaurentPoly::mono(s, 0, 1);
    cols.push_back((zmj * br(zj, pp) * pp * w).scaled(2) - br(pp * w, pp));
    names.push_back("c0_" + std::to_string(s));
  }
  for (int s = 0; s <= 2 * j + k; ++s) {
    LaurentPoly w = LaurentPoly::mono(s, 1, 1);
    cols.push_back((zmj * br(zj, pp) * pp * w).scaled(2) - br(pp * w, pp));
    names.push_back("c1_" + std::to_string(s));
  }
  for (int s = 0; s <= deg; ++s) {
    cols.push_back(-(zj * pp * LaurentPoly::mono(s, 0, 1)));
    names.push_back("a'_" + std::to_string(s));
  }
  for (int s = 0; s <= deg; ++s) {
    cols.push_back(zj * pp * LaurentPoly::mono(s, 0, 1));
    names.push_back("d'_" + std::to_string(s));
  }

  const int u0_rows = 2 * j - 1;
  OracleSystem sys{RatMatrix(u0_rows + m, cols.size()), m, u0_rows, std::move(names)};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int l = 1; l <= 2 * j - 1; ++l)
      if (!cols[c].coeff(l, 0).is_zero())
        throw std::logic_error("oracle: nonzero coefficient in a u-free constraint row");
    for (int t = 0; t < m; ++t) sys.l.at(u0_rows + t, c) = cols[c].coeff(k + 1 + t, 1);
  }
  return sys;
}

int default_bound(const ModuliPoint& p) { return 2 * p.j + p.k + 2; }

int fiber_dim_oracle_at(const ModuliPoint& p, const PoissonStructure& sigma, int deg) {
  OracleSystem sys = assemble_oracle(p, sigma, deg);
  std::size_t rows = sys.l.rows(), cols = sys.l.cols();
  RatMatrix lm(rows, cols + sys.m);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) lm.at(r, c) = sys.l.at(r, c);
  for (int t = 0; t < sys.m; ++t) lm.at(sys.u1_row0 + t, cols + t) = Rational(1);
  return static_cast<int>(lm.rank()) - static_cast<int>(sys.l.rank());
}

void check_sigma(const ModuliPoint& p, const PoissonStructure& sigma) {
  if (sigma.k() != p.k)
    fail(errc::invalid_argument, "oracle: sigma lives on a different surface degree");
}

}  // namespace

int fiber_dimension_oracle(const ModuliPoint& p, const PoissonStructure& sigma, int deg_bound) {
  check_sigma(p, sigma);
  int deg = deg_bound < 0 ? default_bound(p) : deg_bound;
  int v = fiber_dim_oracle_at(p, sigma, deg);
  if (fiber_dim_oracle_at(p, sigma, deg + 2) != v)
    fail(errc::degenerate_bound,
         "fiber_dimension_oracle: answer changed when the degree bound grew");
  return v;
}

EquivalenceResult equivalence_oracle(const ModuliPoint& p, const std::vector<Rational>& p_prime,
                                     const std::vector<Rational>& q_prime,
                                     const PoissonStructure& sigma, int deg_bound) {
  check_sigma(p, sigma);
  if (static_cast<int>(p_prime.size()) != p.m() || static_cast<int>(q_prime.size()) != p.m())
    fail(errc::invalid_argument, "equivalence_oracle: direction vectors must have length m");
  int deg = deg_bound < 0 ? default_bound(p) : deg_bound;

  auto decide = [&](int d) {
    OracleSystem sys = assemble_oracle(p, sigma, d);
    std::vector<Rational> b(sys.l.rows());
    for (int t = 0; t < sys.m; ++t) b[sys.u1_row0 + t] = -(p_prime[t] - q_prime[t]);
    return std::make_pair(sys.l.solve(b), std::move(sys.names));
  };

  auto [sol, names] = decide(deg);
  auto [sol2, names2] = decide(deg + 2);
  if (sol.has_value() != sol2.has_value())
    fail(errc::degenerate_bound,
         "equivalence_oracle: answer changed when the degree bound grew");

  EquivalenceResult out;
  out.equivalent = sol.has_value();
  if (sol) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!(*sol)[i].is_zero()) out.witness.emplace_back(names[i], (*sol)[i]);
  }
  return out;
}

}  // namespace zkq
