#pragma once

#include <vector>

#include "zkq/laurent.hpp"

namespace zkq {

// Polynomial in the formal parameter h with LaurentPoly coefficients:
// f = sum_n f_n h^n. Trailing zero coefficients are trimmed, so equality is
// coefficient-wise. Truncation is explicit; products compute the full
// convolution unless truncated by the caller.
class HbarSeries {
 public:
  HbarSeries() = default;
  explicit HbarSeries(LaurentPoly classical) {
    set_coeff(0, std::move(classical));
  }

  static HbarSeries one() { return HbarSeries(LaurentPoly::constant(1)); }

  // Highest stored h-power; -1 for the zero series.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const LaurentPoly& coeff(int n) const {
    static const LaurentPoly kZero;
    return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[n] : kZero;
  }
  void set_coeff(int n, LaurentPoly p);
  void add_coeff(int n, const LaurentPoly& p);

  const LaurentPoly& classical_limit() const { return coeff(0); }

  HbarSeries& operator+=(const HbarSeries& o);
  HbarSeries& operator-=(const HbarSeries& o);
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  HbarSeries operator-() const;

  // Commutative Cauchy product.
  HbarSeries operator*(const HbarSeries& o) const;
  HbarSeries scaled(const Rational& c) const;

  HbarSeries truncated(int max_order) const;

  friend bool operator==(const HbarSeries&, const HbarSeries&) = default;

 private:
  void trim();
  std::vector<LaurentPoly> c_;
};

}  // namespace zkq
