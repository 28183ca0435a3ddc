#include "wred/error.hpp"
#include "wred/reduction.hpp"

namespace wred {

namespace {

// Element of g with differential-polynomial coordinates.
using LVec = std::vector<DiffPoly>;

LVec lift(const Vec& x) {
  LVec r;
  for (const auto& c : x) r.emplace_back(c);
  return r;
}

LVec lbracket(const LieAlgebra& g, const LVec& x, const LVec& y) {
  LVec r(g.dim());
  for (const auto& en : g.entries()) {
    const DiffPoly& xi = x[en.i];
    const DiffPoly& xj = x[en.j];
    const DiffPoly& yi = y[en.i];
    const DiffPoly& yj = y[en.j];
    DiffPoly t;
    if (!xi.is_zero() && !yj.is_zero()) t += xi * yj;
    if (!xj.is_zero() && !yi.is_zero()) t -= xj * yi;
    if (!t.is_zero()) r[en.k] += en.c * t;
  }
  return r;
}

bool lzero(const LVec& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

void ladd(LVec& x, const LVec& y, const Rational& s = 1) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero()) x[i] += s * y[i];
}

// exp(-ad m)[eps D + s + e] - eps D
LVec gauge_action(const LieAlgebra& g, const LVec& m, const LVec& se) {
  LVec total = se;
  LVec term = se;
  for (int k = 1; !lzero(term); ++k) {
    term = lbracket(g, m, term);
    for (auto& c : term) c *= Rational(-1, k);
    ladd(total, term);
  }
  term.assign(g.dim(), DiffPoly());
  for (std::size_t i = 0; i < m.size(); ++i) term[i] = DiffPoly::eps() * total_derivative(m[i]);
  ladd(total, term);
  for (int j = 1; !lzero(term); ++j) {
    term = lbracket(g, m, term);
    for (auto& c : term) c *= Rational(-1, j + 1);
    ladd(total, term);
  }
  return total;
}

std::vector<Vec> pieces_as_vectors(const Grading& gr, int j, std::size_t n) {
  std::vector<Vec> out;
  for (auto i : gr.piece(j)) out.push_back(unit_vec(n, i));
  return out;
}

}  // namespace

GaugeFixMap ds_gauge_fix(const GradedSetup& s) {
  const LieAlgebra& g = s.algebra();
  const Grading& gr = s.grading();
  const std::size_t n = g.dim();
  const Vec& e = s.triple().e;
  const auto& eta = s.b_minus();

  GaugeFixMap out;
  out.s_dim = eta.size();
  LVec se = lift(e);
  for (std::size_t a = 0; a < eta.size(); ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (eta[a][i] != 0) se[i] += eta[a][i] * DiffPoly::var(static_cast<int>(a));

  LVec m(n);
  Matrix adf = g.ad(s.triple().f);
  for (int k = 1; k >= gr.min_degree() + 2; --k) {
    LVec x = gauge_action(g, m, se);
    auto idx = gr.piece(k);
    std::vector<Vec> ys = k == 1 ? s.ell() : pieces_as_vectors(gr, k - 2, n);
    std::vector<Vec> cols;
    for (const auto& y : ys) cols.push_back(g.bracket(e, y));
    std::size_t ny = cols.size();
    {
      // (g_f)_k
      Matrix sub(n, idx.size());
      for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) sub(r, c) = adf(r, idx[c]);
      for (const auto& coeffs : nullspace(sub)) {
        Vec v = zero_vec(n);
        for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = coeffs[c];
        cols.push_back(v);
      }
    }
    bool any = false;
    for (auto i : idx) any = any || !x[i].is_zero();
    if (!any) continue;
    if (cols.empty()) fail(ErrorCode::Internal, "gauge fixing: degree " + std::to_string(k) + " part cannot be removed");
    auto left = left_inverse(Matrix::from_columns(cols, n));
    if (!left) fail(ErrorCode::Internal, "gauge fixing: [e, g_-] and g_f overlap at degree " + std::to_string(k));
    std::vector<DiffPoly> coef(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (auto i : idx)
        if ((*left)(c, i) != 0 && !x[i].is_zero()) coef[c] += (*left)(c, i) * x[i];
    for (auto i : idx) {
      DiffPoly res = x[i];
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (cols[c][i] != 0 && !coef[c].is_zero()) res -= cols[c][i] * coef[c];
      if (!res.is_zero())
        fail(ErrorCode::Internal, "gauge fixing: degree " + std::to_string(k) + " part is outside [e, g_-] + g_f");
    }
    for (std::size_t t = 0; t < ny; ++t)
      for (std::size_t i = 0; i < n; ++i)
        if (ys[t][i] != 0 && !coef[t].is_zero()) m[i] -= ys[t][i] * coef[t];
  }

  LVec q = gauge_action(g, m, se);
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] != 0) q[i] -= DiffPoly(e[i]);
  const Frame& fr = s.frame();
  for (std::size_t idx = 0; idx < fr.dim(); ++idx) {
    DiffPoly c;
    for (std::size_t i = 0; i < n; ++i) {
      Rational w = 0;
      for (std::size_t j = 0; j < n; ++j) w += g.form_matrix()(i, j) * fr.dual[idx][j];
      if (w != 0 && !q[i].is_zero()) c += w * q[i];
    }
    if (idx < fr.slice_dim) out.q.push_back(std::move(c));
    else if (!c.is_zero()) fail(ErrorCode::Internal, "gauge fixing did not land in e + g_f");
  }
  out.m = std::move(m);
  return out;
}

MatDiffOp restrict_to_S(const GradedSetup& s) {
  const LieAlgebra& g = s.algebra();
  const std::size_t n = g.dim();
  const auto& eta = s.b_minus();

  // Representatives of the s-coordinate covectors, taken in a complement of n_-.
  std::vector<Vec> acc(s.n_minus()), cvec;
  for (std::size_t i = 0; i < n && cvec.size() < eta.size(); ++i) {
    acc.push_back(unit_vec(n, i));
    if (rank(acc, n) < acc.size()) acc.pop_back();
    else cvec.push_back(acc.back());
  }
  Matrix gram(eta.size(), cvec.size());
  for (std::size_t a = 0; a < eta.size(); ++a)
    for (std::size_t c = 0; c < cvec.size(); ++c) gram(a, c) = g.form(eta[a], cvec[c]);
  auto ginv = inverse(gram);
  if (!ginv) fail(ErrorCode::DegenerateForm, "b_- does not pair nondegenerately with g / n_-");
  std::vector<Vec> w;
  for (std::size_t a = 0; a < eta.size(); ++a) {
    Vec v = zero_vec(n);
    for (std::size_t c = 0; c < cvec.size(); ++c)
      if ((*ginv)(c, a) != 0) v = v + (*ginv)(c, a) * cvec[c];
    w.push_back(v);
  }

  PointChart z{s.triple().e, eta};
  MatDiffOp fs = pencil_block(g, w, w, z, s.a());

  // coisotropic directions outside l
  std::vector<Vec> r, span(s.ell());
  for (const auto& v : s.ell_prime()) {
    span.push_back(v);
    if (rank(span, n) < span.size()) span.pop_back();
    else r.push_back(v);
  }
  if (r.empty()) return fs;
  MatDiffOp k = pencil_block(g, r, r, z, s.a());
  Matrix kc(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      const LinDiffOp& x = k(i, j);
      if (x.order() > 0 || !x.coeff(0).is_constant())
        fail(ErrorCode::Internal, "coisotropic pairing on S is not constant");
      kc(i, j) = x.coeff(0).constant_term();
    }
  auto kinv = inverse(kc);
  if (!kinv) fail(ErrorCode::DegenerateForm, "symplectic form is degenerate on l' / l");
  MatDiffOp kop(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) kop(i, j) = LinDiffOp(DiffPoly((*kinv)(i, j)));
  return fs - compose(compose(pencil_block(g, w, r, z, s.a()), kop), pencil_block(g, r, w, z, s.a()));
}

MatDiffOp leibnitz_transform(const GaugeFixMap& map, const MatDiffOp& fs, std::size_t m) {
  if (fs.rows() != map.s_dim || fs.cols() != map.s_dim)
    fail(ErrorCode::ShapeMismatch, "leibnitz_transform: operator does not act on the s coordinates");
  if (map.q.size() != m) fail(ErrorCode::ShapeMismatch, "leibnitz_transform: map has wrong number of outputs");
  std::vector<DiffPoly> section;
  for (std::size_t a = 0; a < map.s_dim; ++a)
    section.push_back(a < m ? DiffPoly::var(static_cast<int>(a)) : DiffPoly());
  auto on_section = [&](const DiffPoly& p) { return substitute(p, section); };
  MatDiffOp dq = frechet_derivative(map.q, static_cast<int>(map.s_dim)).map(on_section);
  MatDiffOp f = fs.map(on_section);
  return compose(compose(dq, f), adjoint(dq));
}

MatDiffOp ds_reduce(const GradedSetup& s) {
  return leibnitz_transform(ds_gauge_fix(s), restrict_to_S(s), s.slice_dim());
}

}  // namespace wred
