#include "skewlr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace skewlr {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (!other(k, j).is_zero()) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational scale = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix left_inverse(const Matrix& m) {
  // Pick independent rows greedily, invert that square block.
  const std::size_t r = m.cols();
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Rational>> reduced;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < m.rows() && chosen.size() < r; ++i) {
    std::vector<Rational> row(r);
    for (std::size_t j = 0; j < r; ++j) row[j] = m(i, j);
    for (std::size_t t = 0; t < reduced.size(); ++t) {
      if (row[pivots[t]].is_zero()) continue;
      const Rational factor = row[pivots[t]];
      for (std::size_t j = 0; j < r; ++j) row[j] -= factor * reduced[t][j];
    }
    std::size_t p = 0;
    while (p < r && row[p].is_zero()) ++p;
    if (p == r) continue;
    const Rational scale = Rational(1) / row[p];
    for (auto& x : row) x *= scale;
    reduced.push_back(std::move(row));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  if (chosen.size() < r) throw std::domain_error("left_inverse: columns are linearly dependent");
  Matrix square(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < r; ++j) square(a, j) = m(chosen[a], j);
  const Matrix inv = *inverse(square);
  Matrix out(r, m.rows());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < r; ++a) out(i, chosen[a]) = inv(i, a);
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(const Matrix& m, const std::vector<Rational>& y) {
  const std::vector<Rational> x = left_inverse(m) * y;
  if (m * x != y) return std::nullopt;
  return x;
}

}  // namespace skewlr
