#include <cstdlib>
#include <string>

#include "wred/error.hpp"
#include "wred/reduction.hpp"

namespace wred {

int default_order_cap(std::size_t dim_g) {
  if (const char* env = std::getenv("W_REDUCE_ORDER_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0 || v > 100000)
      fail(ErrorCode::InvalidArgument, "W_REDUCE_ORDER_CAP must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<int>(v);
  }
  return static_cast<int>(2 * dim_g);
}

namespace {

using PolyMatrix = std::vector<std::vector<DiffPoly>>;

// Gauss-Jordan elimination using only nonzero rational pivots.
PolyMatrix invert_polynomial(PolyMatrix a) {
  const std::size_t n = a.size();
  PolyMatrix inv(n, std::vector<DiffPoly>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = DiffPoly(1);
  std::vector<bool> row_used(n, false), col_used(n, false);
  std::vector<std::size_t> pivot_row_of_col(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pr = n, pc = n;
    for (std::size_t r = 0; r < n && pr == n; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!col_used[c] && !a[r][c].is_zero() && a[r][c].is_constant()) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr == n)
      fail(ErrorCode::NoFiniteOrderInverse, "eps^0 part of the minor has no invertible constant pivot left");
    row_used[pr] = col_used[pc] = true;
    pivot_row_of_col[pc] = pr;
    Rational s = 1 / a[pr][pc].constant_term();
    for (auto& x : a[pr]) x *= s;
    for (auto& x : inv[pr]) x *= s;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pr || a[r][pc].is_zero()) continue;
      DiffPoly factor = a[r][pc];
      for (std::size_t c = 0; c < n; ++c) {
        if (!a[pr][c].is_zero()) a[r][c] -= factor * a[pr][c];
        if (!inv[pr][c].is_zero()) inv[r][c] -= factor * inv[pr][c];
      }
    }
  }
  // row pr now reads e_{pc}; reorder so that row c holds the pivot of column c
  PolyMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) out[c] = inv[pivot_row_of_col[c]];
  return out;
}

MatDiffOp eps_power(const MatDiffOp& a, int k) {
  return a.map([k](const DiffPoly& c) { return DiffPoly::eps(k) * c; });
}

}  // namespace

MatDiffOp invert_minor(const MatDiffOp& a, int cap) {
  if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, "invert_minor needs a square operator");
  const std::size_t n = a.rows();
  if (n == 0) return MatDiffOp(0, 0);
  const int p = std::max(a.eps_degree(), 0);
  std::vector<MatDiffOp> parts;
  for (int t = 0; t <= p; ++t) parts.push_back(eps_part(a, t));
  if (parts[0].order() > 0)
    fail(ErrorCode::NoFiniteOrderInverse, "eps^0 part of the minor contains derivatives; no finite-order inverse");
  PolyMatrix a0(n, std::vector<DiffPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a0[i][j] = parts[0](i, j).coeff(0);
  PolyMatrix i0 = invert_polynomial(a0);
  MatDiffOp s0(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s0(i, j) = LinDiffOp(i0[i][j]);

  // A S = I order by order in eps: S[k] = -S[0] sum_{t>=1} A[t] S[k-t]
  std::vector<MatDiffOp> s{s0};
  int zeros = 0;
  for (int k = 1; zeros < p; ++k) {
    if (k > cap)
      fail(ErrorCode::NoFiniteOrderInverse,
           "minor inverse needs more than " + std::to_string(cap) + " eps-orders (cap; see W_REDUCE_ORDER_CAP)");
    MatDiffOp acc(n, n);
    for (int t = 1; t <= std::min(k, p); ++t)
      if (!parts[static_cast<std::size_t>(t)].is_zero() && !s[static_cast<std::size_t>(k - t)].is_zero())
        acc += compose(parts[static_cast<std::size_t>(t)], s[static_cast<std::size_t>(k - t)]);
    MatDiffOp sk = -compose(s0, acc);
    zeros = sk.is_zero() ? zeros + 1 : 0;
    s.push_back(std::move(sk));
  }
  MatDiffOp total(n, n);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!s[k].is_zero()) total += eps_power(s[k], static_cast<int>(k));
  MatDiffOp id = MatDiffOp::identity(n);
  if (!(compose(a, total) == id) || !(compose(total, a) == id))
    fail(ErrorCode::NoFiniteOrderInverse, "minor has no two-sided finite-order inverse");
  return total;
}

DiracResult dirac_reduce(const MatDiffOp& pencil, const std::vector<std::size_t>& keep,
                         const std::vector<std::size_t>& constraints, int cap) {
  if (pencil.rows() != pencil.cols()) fail(ErrorCode::ShapeMismatch, "dirac_reduce needs a square operator");
  for (auto i : keep)
    if (i >= pencil.rows()) fail(ErrorCode::ShapeMismatch, "dirac_reduce: index out of range");
  for (auto i : constraints)
    if (i >= pencil.rows()) fail(ErrorCode::ShapeMismatch, "dirac_reduce: index out of range");
  DiracResult r;
  r.inverse = invert_minor(pencil.block(constraints, constraints), cap);
  MatDiffOp left = pencil.block(keep, constraints);
  MatDiffOp right = pencil.block(constraints, keep);
  r.reduced = pencil.block(keep, keep) - compose(compose(left, r.inverse), right);
  return r;
}

DiracResult dirac_reduce(const GradedSetup& s) {
  MatDiffOp f = lie_poisson_pencil(s, PencilDomain::Slice);
  std::vector<std::size_t> keep, cons;
  for (std::size_t i = 0; i < f.rows(); ++i) (i < s.slice_dim() ? keep : cons).push_back(i);
  return dirac_reduce(f, keep, cons, default_order_cap(s.algebra().dim()));
}

}  // namespace wred
