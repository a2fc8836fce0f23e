#ifndef COALSPEC_MATRIX_HPP
#define COALSPEC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "coalspec/rational.hpp"

namespace coalspec {

// Dense row-major matrix of exact rationals. Sizes stay small (a few dozen
// rows after coalescing), so no sparsity machinery.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational &at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rational &at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  static RationalMatrix identity(std::size_t n);

  // Copy with the given (sorted, duplicate-free) row/column indices removed.
  RationalMatrix without_indices(const std::vector<int> &indices) const;

  friend bool operator==(const RationalMatrix &a, const RationalMatrix &b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

// Exact determinant by rational Gaussian elimination.
Rational determinant(RationalMatrix m);

// Exact solution of M x = rhs for square nonsingular M; throws on a
// singular matrix (for the binomial systems that would mean an internal
// consistency failure, never expected input).
std::vector<Rational> solve_linear(const RationalMatrix &m, const std::vector<Rational> &rhs);

} // namespace coalspec

#endif
