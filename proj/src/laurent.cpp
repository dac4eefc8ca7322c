#include "zkq/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace zkq {

void LaurentPoly::add_term(int l, int i, const Rational& c) {
  if (i < 0) throw std::logic_error("LaurentPoly: negative u-exponent");
  if (c.is_zero()) return;
  Mono m{i, l};
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m.l, m.i, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m.l, m.i, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) r.add_term(ma.l + mb.l, ma.i + mb.i, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int dl, int di) const {
  LaurentPoly r;
  for (const auto& [m, c] : t_) r.add_term(m.l + dl, m.i + di, c);
  return r;
}

LaurentPoly LaurentPoly::dz() const {
  LaurentPoly r;
  for (const auto& [m, c] : t_)
    if (m.l != 0) r.add_term(m.l - 1, m.i, c * Rational(m.l));
  return r;
}

LaurentPoly LaurentPoly::du() const {
  LaurentPoly r;
  for (const auto& [m, c] : t_)
    if (m.i != 0) r.add_term(m.l, m.i - 1, c * Rational(m.i));
  return r;
}

std::optional<std::pair<Mono, Rational>> LaurentPoly::single_term() const {
  if (t_.size() != 1) return std::nullopt;
  return *t_.begin();
}

LaurentPoly LaurentPoly::restrict_u0() const {
  LaurentPoly r;
  for (const auto& [m, c] : t_)
    if (m.i == 0) r.t_.emplace(m, c);
  return r;
}

int LaurentPoly::min_z() const {
  int v = 0;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (first || m.l < v) v = m.l;
    first = false;
  }
  return v;
}

int LaurentPoly::max_z() const {
  int v = 0;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (first || m.l > v) v = m.l;
    first = false;
  }
  return v;
}

int LaurentPoly::max_u() const {
  int v = 0;
  for (const auto& [m, c] : t_) v = std::max(v, m.i);
  return v;
}

LaurentPoly to_other_chart(const LaurentPoly& f, int k) {
  LaurentPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term(k * m.i - m.l, m.i, c);
  return r;
}

bool chart_member(const LaurentPoly& f, Chart chart, int k, std::vector<Mono>* offending) {
  bool ok = true;
  for (const auto& [m, c] : f.terms()) {
    bool in = true;
    switch (chart) {
      case Chart::UV: in = true; break;
      case Chart::U: in = m.l >= 0; break;
      case Chart::V: in = m.l <= k * m.i; break;
      case Chart::Global: in = m.l >= 0 && m.l <= k * m.i; break;
    }
    if (!in) {
      ok = false;
      if (offending) offending->push_back(m);
    }
  }
  return ok;
}

}  // namespace zkq
