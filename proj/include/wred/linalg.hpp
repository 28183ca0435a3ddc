#pragma once

// Exact dense linear algebra over the rationals. Sizes here are small
// (dim g <= ~30), so plain Gauss-Jordan elimination is all we need.

#include <cstddef>
#include <optional>
#include <vector>

#include "wred/rational.hpp"

namespace wred {

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  // Columns of the result are the given vectors.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vec>& vectors, std::size_t dim);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> nullspace(const Matrix& m);

// Linearly independent subset of the given vectors, in order.
std::vector<Vec> independent_subset(const std::vector<Vec>& vectors, std::size_t dim);

// Reduced echelon basis of the span.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

// Coefficients c with sum_i c_i basis_i == v, if v is in the span of an independent basis.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);

std::optional<Matrix> inverse(const Matrix& m);

// L with L * m == identity for a matrix of full column rank.
std::optional<Matrix> left_inverse(const Matrix& m);

Rational determinant(Matrix m);

}  // namespace wred
