#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zkq/rational.hpp"

namespace zkq {

// Dense matrix over Q with exact elimination. Sized for the small systems
// that arise here (moduli constraint systems, Toeplitz ranks, restriction
// section counts); rank() works on a copy.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

  std::size_t rank() const;

  // Rank of the submatrix formed by the given column subset (in order).
  std::size_t rank_of_columns(const std::vector<std::size_t>& cols) const;

  // Appends b as an extra column and reports whether A x = b is consistent.
  bool consistent(const std::vector<Rational>& b) const;

  // Particular solution of A x = b with free variables set to zero, or
  // nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> a_;
};

// Sparse exact row-echelon eliminator. Rows are sorted (index, value) lists;
// insertion reduces against current pivots and records a new pivot when a
// nonzero residual remains. Suited to the Cech coboundary systems, whose
// generators are single monomials or short monomial combinations.
using SparseVec = std::vector<std::pair<int, Rational>>;

class SparseEliminator {
 public:
  // Returns true when the vector enlarged the span (rank grew by one).
  bool add(SparseVec v);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<int, SparseVec> pivots_;  // leading index -> row normalized to leading 1
};

}  // namespace zkq
