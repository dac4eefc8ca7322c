#include "zkq/star_matrix.hpp"

#include "zkq/errors.hpp"

namespace zkq {

StarMatrix2 star_mul(const StarContext& ctx, const StarMatrix2& a, const StarMatrix2& b) {
  StarMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = star(ctx, a.e[i][0], b.e[0][j]) + star(ctx, a.e[i][1], b.e[1][j]);
  return r;
}

StarMatrix2 star_right_inverse(const StarContext& ctx, const StarMatrix2& t) {
  if (!t.e[1][0].is_zero())
    fail(errc::not_classically_filtered, "star_right_inverse: lower-left entry must vanish");
  auto ua = t.e[0][0].classical_limit().single_term();
  auto ud = t.e[1][1].classical_limit().single_term();
  if (!ua || !ud || ua->first.i != 0 || ud->first.i != 0)
    fail(errc::non_invertible_classical_limit,
         "star_right_inverse: diagonal classical limits must be monomials c z^l");

  LaurentPoly ainv = LaurentPoly::mono(-ua->first.l, 0, ua->second.inverse());
  LaurentPoly dinv = LaurentPoly::mono(-ud->first.l, 0, ud->second.inverse());
  LaurentPoly b0 = t.e[0][1].classical_limit();

  // Classical inverse of (a0, b0; 0, d0).
  StarMatrix2 r;
  r.e[0][0] = HbarSeries(ainv);
  r.e[1][1] = HbarSeries(dinv);
  r.e[0][1] = HbarSeries((ainv * b0 * dinv).scaled(Rational(-1)));

  for (int n = 1; n <= ctx.order; ++n) {
    StarMatrix2 prod = star_mul(ctx, t, r);
    // residual at order n; kill it with r_n = -T0^{-1} residual_n
    LaurentPoly e00 = prod.e[0][0].coeff(n), e01 = prod.e[0][1].coeff(n);
    LaurentPoly e10 = prod.e[1][0].coeff(n), e11 = prod.e[1][1].coeff(n);
    // T0^{-1} = (ainv, -ainv b0 dinv; 0, dinv)
    LaurentPoly i01 = (ainv * b0 * dinv).scaled(Rational(-1));
    r.e[0][0].add_coeff(n, -(ainv * e00 + i01 * e10));
    r.e[0][1].add_coeff(n, -(ainv * e01 + i01 * e11));
    r.e[1][0].add_coeff(n, -(dinv * e10));
    r.e[1][1].add_coeff(n, -(dinv * e11));
  }

  StarMatrix2 check = star_mul(ctx, t, r);
  StarMatrix2 check_left = star_mul(ctx, r, t);
  StarMatrix2 id = StarMatrix2::identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (!(check.e[i][j].truncated(ctx.order) == id.e[i][j]) ||
          !(check_left.e[i][j].truncated(ctx.order) == id.e[i][j]))
        throw std::logic_error("star_right_inverse: verification failed");
    }
  return r;
}

}  // namespace zkq
