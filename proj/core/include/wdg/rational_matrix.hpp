#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "wdg/rational.hpp"

namespace wdg {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  /// Zero matrix of the given shape.
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Row-by-row literal; throws ShapeMismatch on ragged rows.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  /// Ordinary matrix product; throws ShapeMismatch.
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; entry (i·b.rows()+k, j·b.cols()+l) = a(i,j)·b(k,l).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Entrywise product; throws ShapeMismatch.
RationalMatrix hadamard(const RationalMatrix& a, const RationalMatrix& b);

/// Entrywise |a_ij|. On rationals this is exactly the Hadamard square root of
/// the Hadamard square, without leaving the rationals.
RationalMatrix abs_matrix(const RationalMatrix& a);

/// Sum of the entries strictly above the diagonal (square input).
Rational upper_triangle_sum(const RationalMatrix& a);

/// Sum of all entries.
Rational entry_sum(const RationalMatrix& a);

/// ½·x·A·xᵗ for a ±1 (or any rational) row vector x.
Rational half_quadratic_form(const RationalMatrix& a, const std::vector<Rational>& x);

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix a);

}  // namespace wdg
