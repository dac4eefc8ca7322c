#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkq/rational.hpp"

namespace zkq {

// Exponent pair of a monomial z^l u^i with i >= 0 and l any integer.
// Canonical term order is lexicographic on (i, l).
//
// The same type carries second-chart data with (xi-exponent, v-exponent) in
// the (l, i) slots; call sites state which role is in effect.
struct Mono {
  int i = 0;  // u-exponent
  int l = 0;  // z-exponent
  friend auto operator<=>(const Mono&, const Mono&) = default;
};

enum class Chart { U, V, UV, Global };

inline const char* chart_name(Chart c) {
  switch (c) {
    case Chart::U: return "U";
    case Chart::V: return "V";
    case Chart::UV: return "UV";
    case Chart::Global: return "Global";
  }
  return "?";
}

// Laurent polynomial in z with polynomial u-dependence: finite sums
// sum c_{l,i} z^l u^i over l in Z, i in Z>=0, exact rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(const Rational& c) { return mono(0, 0, c); }
  static LaurentPoly mono(int l, int i, const Rational& c) {
    LaurentPoly p;
    p.add_term(l, i, c);
    return p;
  }

  const std::map<Mono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t num_terms() const { return t_.size(); }

  Rational coeff(int l, int i) const {
    auto it = t_.find(Mono{i, l});
    return it == t_.end() ? Rational(0) : it->second;
  }

  // Merges a term into the polynomial, dropping it if the sum cancels.
  void add_term(int l, int i, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const;

  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& c) const;

  // Multiplication by z^dl u^di; throws if any u-exponent would go negative.
  LaurentPoly shifted(int dl, int di) const;

  LaurentPoly dz() const;  // d/dz
  LaurentPoly du() const;  // d/du

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{}); }
  Rational constant_value() const { return coeff(0, 0); }

  // The single term of a one-term polynomial, if that is what this is.
  std::optional<std::pair<Mono, Rational>> single_term() const;

  // Terms with u-exponent zero (restriction to the zero section u = 0).
  LaurentPoly restrict_u0() const;

  int min_z() const;  // over all terms; 0 for the zero polynomial
  int max_z() const;
  int max_u() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<Mono, Rational> t_;
};

// Chart transition of Z_k = Tot(O_P1(-k)): z^l u^i  <->  xi^(ki-l) v^i.
// The exponent map is an involution, so the same function converts both ways.
LaurentPoly to_other_chart(const LaurentPoly& f, int k);
inline LaurentPoly to_v_chart(const LaurentPoly& f, int k) { return to_other_chart(f, k); }
inline LaurentPoly to_u_chart(const LaurentPoly& f, int k) { return to_other_chart(f, k); }

// Membership of a (z,u)-expression in the ring of a chart of Z_k:
//   UV: any l;   U: l >= 0;   V: l <= k*i;   Global: 0 <= l <= k*i.
// When `offending` is given it receives the violating monomials.
bool chart_member(const LaurentPoly& f, Chart chart, int k, std::vector<Mono>* offending = nullptr);

}  // namespace zkq
