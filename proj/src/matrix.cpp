#include "coalspec/matrix.hpp"

#include <cstddef>

namespace coalspec {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::without_indices(const std::vector<int> &indices) const {
  std::vector<bool> drop_row(rows, false), drop_col(cols, false);
  for (int i : indices) {
    if (i < 0 || (static_cast<std::size_t>(i) >= rows && static_cast<std::size_t>(i) >= cols))
      throw error("matrix: delete index out of range");
    if (static_cast<std::size_t>(i) < rows)
      drop_row[static_cast<std::size_t>(i)] = true;
    if (static_cast<std::size_t>(i) < cols)
      drop_col[static_cast<std::size_t>(i)] = true;
  }
  RationalMatrix out(rows - indices.size(), cols - indices.size());
  std::size_t ro = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (drop_row[r])
      continue;
    std::size_t co = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (drop_col[c])
        continue;
      out.at(ro, co) = at(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows != m.cols)
    throw error("determinant: matrix not square");
  const std::size_t n = m.rows;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      return Rational(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c)
        std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero())
        continue;
      Rational f = m.at(r, col) / m.at(col, col);
      for (std::size_t c = col; c < n; ++c)
        m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

std::vector<Rational> solve_linear(const RationalMatrix &m, const std::vector<Rational> &rhs) {
  if (m.rows != m.cols)
    throw error("solve_linear: matrix not square");
  if (rhs.size() != m.rows)
    throw error("solve_linear: rhs size mismatch");
  const std::size_t n = m.rows;
  RationalMatrix a = m;
  std::vector<Rational> b = rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      throw error("solve_linear: singular matrix");
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c)
        std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero())
        continue;
      Rational f = a.at(r, col) / a.at(col, col);
      for (std::size_t c = col; c < n; ++c)
        a.at(r, c) -= f * a.at(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j)
      acc -= a.at(i, j) * x[j];
    x[i] = acc / a.at(i, i);
  }
  return x;
}

} // namespace coalspec
