#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrcones/rational.hpp"

namespace lrcones {

/// Dense row-major matrix over exact rationals. Only what the rank and
/// determinant certificates need.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_lower_triangular() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != 0) return false;
    return true;
  }

  bool has_unit_diagonal() const {
    for (std::size_t d = 0; d < std::min(rows_, cols_); ++d)
      if ((*this)(d, d) != 1) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

namespace detail {

// Gauss-Jordan forward elimination in place; returns the rank and the sign
// flips from row swaps (for the determinant).
inline std::size_t eliminate(RationalMatrix& m, int& swap_sign) {
  swap_sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
      swap_sign = -swap_sign;
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational factor = m(r, col) / m(rank, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) {
  int sign = 1;
  return detail::eliminate(m, sign);
}

inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  int sign = 1;
  if (detail::eliminate(m, sign) < m.rows()) return Rational(0);
  Rational det(sign);
  for (std::size_t d = 0; d < m.rows(); ++d) det *= m(d, d);
  return det;
}

}  // namespace lrcones
