#pragma once

#include <array>

#include "zkq/star.hpp"

namespace zkq {

// 2x2 matrix of h-series with the star product as entry multiplication.
struct StarMatrix2 {
  std::array<std::array<HbarSeries, 2>, 2> e;

  static StarMatrix2 identity() {
    StarMatrix2 m;
    m.e[0][0] = HbarSeries::one();
    m.e[1][1] = HbarSeries::one();
    return m;
  }
  static StarMatrix2 diag(HbarSeries a, HbarSeries d) {
    StarMatrix2 m;
    m.e[0][0] = std::move(a);
    m.e[1][1] = std::move(d);
    return m;
  }

  friend bool operator==(const StarMatrix2&, const StarMatrix2&) = default;
};

StarMatrix2 star_mul(const StarContext& ctx, const StarMatrix2& a, const StarMatrix2& b);

// Right star inverse of an upper-triangular matrix whose diagonal classical
// limits are single monomials c z^l; verified two-sided before returning.
// NonInvertibleClassicalLimit / NotClassicallyFiltered otherwise.
StarMatrix2 star_right_inverse(const StarContext& ctx, const StarMatrix2& t);

}  // namespace zkq
