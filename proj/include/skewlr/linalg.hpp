#pragma once

#include <optional>
#include <vector>

#include "skewlr/rational.hpp"

namespace skewlr {

/// Dense row-major matrix over ℚ.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& other) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// For m of full column rank: a matrix L with L·m = I. Throws std::domain_error
/// if the columns are dependent.
Matrix left_inverse(const Matrix& m);

/// x with m·x = y, or std::nullopt if y is outside the column span.
/// m must have full column rank.
std::optional<std::vector<Rational>> solve_in_span(const Matrix& m, const std::vector<Rational>& y);

}  // namespace skewlr
