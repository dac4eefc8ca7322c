#include "zkq/series.hpp"

namespace zkq {

void HbarSeries::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void HbarSeries::set_coeff(int n, LaurentPoly p) {
  if (n < 0) throw std::logic_error("HbarSeries: negative order");
  if (n >= static_cast<int>(c_.size())) {
    if (p.is_zero()) return;
    c_.resize(n + 1);
  }
  c_[n] = std::move(p);
  trim();
}

void HbarSeries::add_coeff(int n, const LaurentPoly& p) {
  if (p.is_zero()) return;
  if (n >= static_cast<int>(c_.size())) c_.resize(n + 1);
  c_[n] += p;
  trim();
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& o) {
  for (int n = 0; n <= o.order(); ++n) add_coeff(n, o.coeff(n));
  return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& o) {
  for (int n = 0; n <= o.order(); ++n) add_coeff(n, -o.coeff(n));
  return *this;
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries r;
  for (int n = 0; n <= order(); ++n) r.add_coeff(n, -coeff(n));
  return r;
}

HbarSeries HbarSeries::operator*(const HbarSeries& o) const {
  HbarSeries r;
  for (int a = 0; a <= order(); ++a) {
    if (c_[a].is_zero()) continue;
    for (int b = 0; b <= o.order(); ++b) r.add_coeff(a + b, c_[a] * o.coeff(b));
  }
  return r;
}

HbarSeries HbarSeries::scaled(const Rational& c) const {
  HbarSeries r;
  for (int n = 0; n <= order(); ++n) r.add_coeff(n, coeff(n).scaled(c));
  return r;
}

HbarSeries HbarSeries::truncated(int max_order) const {
  HbarSeries r;
  for (int n = 0; n <= order() && n <= max_order; ++n) r.add_coeff(n, coeff(n));
  return r;
}

}  // namespace zkq
