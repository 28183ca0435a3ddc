#include "wred/linalg.hpp"

#include <utility>

namespace wred {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Vec operator*(const Matrix& a, const Vec& v) {
  Vec r = zero_vec(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
  return r;
}

Echelon rref(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(vectors, dim));
}

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = unit_vec(m.cols(), free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vectors, std::size_t dim) {
  std::vector<Vec> out;
  for (const auto& v : vectors) {
    out.push_back(v);
    if (rank(out, dim) < out.size()) out.pop_back();
  }
  return out;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Echelon e = rref(Matrix::from_columns(vectors, dim).transpose());
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  std::vector<Vec> ext(basis);
  ext.push_back(v);
  return rank(ext, v.size()) == rank(basis, v.size());
}

std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  Matrix a = Matrix::from_columns(basis, v.size());
  auto l = left_inverse(a);
  if (!l) return std::nullopt;
  Vec c = *l * v;
  if (a * c != v) return std::nullopt;
  return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::optional<Matrix> left_inverse(const Matrix& m) {
  // (m^T m)^{-1} m^T is exact and valid whenever m has full column rank.
  Matrix mt = m.transpose();
  auto g = inverse(mt * m);
  if (!g) return std::nullopt;
  return *g * mt;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) return 0;
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

}  // namespace wred
