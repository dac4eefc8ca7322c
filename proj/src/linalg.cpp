#include "zkq/linalg.hpp"

#include <algorithm>

namespace zkq {

namespace {

std::size_t eliminate(std::vector<std::vector<Rational>>& a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    Rational inv = a[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  auto copy = a_;
  return eliminate(copy);
}

std::size_t RatMatrix::rank_of_columns(const std::vector<std::size_t>& cols) const {
  std::vector<std::vector<Rational>> sub(rows_, std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) sub[r][j] = a_[r][cols[j]];
  return eliminate(sub);
}

bool RatMatrix::consistent(const std::vector<Rational>& b) const {
  auto aug = a_;
  for (std::size_t r = 0; r < rows_; ++r) aug[r].push_back(b[r]);
  auto plain = a_;
  return eliminate(aug) == eliminate(plain);
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
  auto aug = a_;
  for (std::size_t r = 0; r < rows_; ++r) aug[r].push_back(b[r]);
  eliminate(aug);
  std::vector<Rational> x(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t lead = cols_ + 1;
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (!aug[r][c].is_zero()) {
        lead = c;
        break;
      }
    }
    if (lead == cols_) return std::nullopt;  // 0 = nonzero row
    if (lead < cols_) x[lead] = aug[r][cols_];
  }
  return x;
}

bool SparseEliminator::add(SparseVec v) {
  while (!v.empty()) {
    int lead = v.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      Rational inv = v.front().second.inverse();
      for (auto& [idx, val] : v) val *= inv;
      pivots_.emplace(lead, std::move(v));
      return true;
    }
    // v -= v[0] * pivot  (merge of two sorted term lists)
    const SparseVec& p = it->second;
    Rational f = v.front().second;
    SparseVec merged;
    merged.reserve(v.size() + p.size());
    std::size_t a = 0, b = 0;
    while (a < v.size() || b < p.size()) {
      if (b == p.size() || (a < v.size() && v[a].first < p[b].first)) {
        merged.push_back(v[a++]);
      } else if (a == v.size() || p[b].first < v[a].first) {
        merged.emplace_back(p[b].first, -(f * p[b].second));
        ++b;
      } else {
        Rational s = v[a].second - f * p[b].second;
        if (!s.is_zero()) merged.emplace_back(v[a].first, std::move(s));
        ++a;
        ++b;
      }
    }
    v = std::move(merged);
  }
  return false;
}

}  // namespace zkq
