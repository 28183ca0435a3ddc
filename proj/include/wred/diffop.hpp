#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wred/diffpoly.hpp"

namespace wred {

// sum_k a_k D^k with D the total x-derivative. Trailing zero coefficients are trimmed.
class LinDiffOp {
public:
  LinDiffOp() = default;
  LinDiffOp(DiffPoly a0);  // NOLINT: multiplication operator
  explicit LinDiffOp(std::vector<DiffPoly> coeffs);

  static LinDiffOp d(int k = 1);  // D^k

  int order() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const DiffPoly& coeff(int k) const;
  const std::vector<DiffPoly>& coeffs() const { return c_; }
  void add(int k, const DiffPoly& p);

  LinDiffOp& operator+=(const LinDiffOp& o);
  LinDiffOp& operator-=(const LinDiffOp& o);
  LinDiffOp operator-() const;
  bool operator==(const LinDiffOp& o) const { return c_ == o.c_; }

  // Applies f to every coefficient.
  LinDiffOp map(const std::function<DiffPoly(const DiffPoly&)>& f) const;

private:
  void trim();
  std::vector<DiffPoly> c_;
};

LinDiffOp operator+(LinDiffOp a, const LinDiffOp& b);
LinDiffOp operator-(LinDiffOp a, const LinDiffOp& b);
LinDiffOp operator*(const DiffPoly& p, const LinDiffOp& a);  // left multiplication
LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b);
LinDiffOp adjoint(const LinDiffOp& a);
DiffPoly apply(const LinDiffOp& a, const DiffPoly& v);

class MatDiffOp {
public:
  MatDiffOp() = default;
  MatDiffOp(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static MatDiffOp identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LinDiffOp& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const LinDiffOp& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const;
  int order() const;
  int eps_degree() const;
  int lam_degree() const;
  MatDiffOp transpose() const;
  MatDiffOp map(const std::function<DiffPoly(const DiffPoly&)>& f) const;
  MatDiffOp block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  MatDiffOp& operator+=(const MatDiffOp& o);
  MatDiffOp& operator-=(const MatDiffOp& o);
  MatDiffOp operator-() const;
  bool operator==(const MatDiffOp& o) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LinDiffOp> e_;
};

MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b);
MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b);
MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b);
MatDiffOp adjoint(const MatDiffOp& a);
std::vector<DiffPoly> apply(const MatDiffOp& a, const std::vector<DiffPoly>& v);

// Coefficient of lam^p / eps^q in every entry.
MatDiffOp lam_part(const MatDiffOp& a, int p);
MatDiffOp eps_part(const MatDiffOp& a, int q);

// (DQ)^i_j = sum_k dQ^i/du^{j,(k)} D^k over nfields input fields.
MatDiffOp frechet_derivative(const std::vector<DiffPoly>& q, int nfields);

// "(c_N)*D^N + ... + (c_0)"; "0" for the zero operator.
std::string to_string(const LinDiffOp& a, std::string_view var = "u");

}  // namespace wred
