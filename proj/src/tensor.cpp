#include <algorithm>
#include <functional>
#include <map>

#include "wred/error.hpp"
#include "wred/reduction.hpp"

namespace wred {

namespace {

LinDiffOp row_times(const MatDiffOp& f, std::size_t row, const MatDiffOp& v, std::size_t col,
                    const std::vector<bool>& known) {
  LinDiffOp acc;
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (known[j] && !f(row, j).is_zero() && !v(j, col).is_zero()) acc += compose(f(row, j), v(j, col));
  return acc;
}

}  // namespace

MatDiffOp tensor_procedure(const GradedSetup& s) {
  const LieAlgebra& g = s.algebra();
  const Grading& gr = s.grading();
  const std::size_t n = g.dim(), m = s.slice_dim();

  for (int j = 2; j <= gr.max_degree(); ++j)
    if (!is_zero(gr.component(s.a(), j)))
      fail(ErrorCode::ACondition, "tensor procedure needs a in degrees <= 1; a has a degree " + std::to_string(j) + " component");

  auto comp = graded_complement_basis(g, s.triple(), gr);
  std::vector<Vec> basis(s.slice_basis());
  basis.insert(basis.end(), comp.begin(), comp.end());
  Frame fr = make_frame(g, basis, m);
  MatDiffOp f = frame_pencil(g, fr, s.triple().e, s.a(), PencilDomain::Slice);

  std::map<int, std::vector<std::size_t>, std::greater<>> rows_by_degree;
  std::map<int, std::vector<std::size_t>> cols_by_degree;
  for (std::size_t b = m; b < n; ++b) {
    auto d = gr.degree_of(basis[b]);
    if (!d) fail(ErrorCode::Internal, "graded complement vector is not homogeneous");
    rows_by_degree[*d].push_back(b);
    cols_by_degree[*d].push_back(b);
  }

  MatDiffOp v(n, m);
  std::vector<bool> known(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    v(i, i) = LinDiffOp(DiffPoly(1));
    known[i] = true;
  }

  for (const auto& [k, rows] : rows_by_degree) {
    auto it = cols_by_degree.find(2 - k);
    std::vector<std::size_t> unknowns = it == cols_by_degree.end() ? std::vector<std::size_t>{} : it->second;
    if (unknowns.size() != rows.size())
      fail(ErrorCode::BadGrading, "tensor procedure: ad e does not pair degree " + std::to_string(k) + " with degree " +
                                      std::to_string(2 - k) + " (grading not good?)");
    Matrix block(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < unknowns.size(); ++c) {
        const LinDiffOp& x = f(rows[r], unknowns[c]);
        if (x.order() > 0 || !x.coeff(0).is_constant())
          fail(ErrorCode::Internal, "tensor procedure: non-constant pivot block at degree " + std::to_string(k));
        block(r, c) = x.coeff(0).constant_term();
      }
      for (std::size_t j = 0; j < n; ++j)
        if (!known[j] && !f(rows[r], j).is_zero() &&
            std::find(unknowns.begin(), unknowns.end(), j) == unknowns.end())
          fail(ErrorCode::Internal, "tensor procedure: constraint couples an unknown out of order");
    }
    auto inv = inverse(block);
    if (!inv) fail(ErrorCode::BadGrading, "tensor procedure: singular ad e block at degree " + std::to_string(k));
    std::vector<std::vector<LinDiffOp>> rhs(rows.size(), std::vector<LinDiffOp>(m));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t col = 0; col < m; ++col) rhs[r][col] = row_times(f, rows[r], v, col, known);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      for (std::size_t col = 0; col < m; ++col) {
        LinDiffOp acc;
        for (std::size_t r = 0; r < rows.size(); ++r)
          if ((*inv)(c, r) != 0 && !rhs[r][col].is_zero()) acc -= DiffPoly((*inv)(c, r)) * rhs[r][col];
        v(unknowns[c], col) = acc;
      }
    for (auto u : unknowns) known[u] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!known[j]) fail(ErrorCode::Internal, "tensor procedure left an unknown undetermined");

  MatDiffOp out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t col = 0; col < m; ++col) out(i, col) = row_times(f, i, v, col, known);
  return out;
}

}  // namespace wred
