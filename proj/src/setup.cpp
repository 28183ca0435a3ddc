#include "wred/setup.hpp"

#include <algorithm>

#include "wred/error.hpp"

namespace wred {

Frame make_frame(const LieAlgebra& g, std::vector<Vec> basis, std::size_t slice_dim) {
  const std::size_t n = g.dim();
  if (basis.size() != n) fail(ErrorCode::ShapeMismatch, "frame needs exactly dim g vectors");
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = g.form(basis[i], basis[j]);
  auto inv = inverse(gram);
  if (!inv) fail(ErrorCode::DegenerateForm, "frame is not a basis or the form is degenerate on it");
  Frame fr;
  fr.slice_dim = slice_dim;
  for (std::size_t j = 0; j < n; ++j) {
    Vec d = zero_vec(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((*inv)(k, j) != 0) d = d + (*inv)(k, j) * basis[k];
    fr.dual.push_back(std::move(d));
  }
  fr.basis = std::move(basis);
  return fr;
}

namespace {

std::vector<Vec> stack_nullspace(const std::vector<Matrix>& blocks, std::size_t n) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix m(rows, n);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return nullspace(m);
}

Matrix shifted(const Matrix& m, const Rational& s) {
  Matrix r(m);
  for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= s;
  return r;
}

// Column-reversed echelon basis, each vector scaled so its first nonzero entry is 1.
std::vector<Vec> normalized_basis(const std::vector<Vec>& vs, std::size_t n) {
  std::vector<Vec> rev;
  for (const auto& v : vs) rev.emplace_back(v.rbegin(), v.rend());
  std::vector<Vec> out;
  for (const auto& r : span_basis(rev, n)) {
    Vec v(r.rbegin(), r.rend());
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    Rational s = 1 / *first;
    out.push_back(s * v);
  }
  return out;
}

int eigen_bound(const LieAlgebra& g, const Vec& h) {
  Matrix ad = g.ad(h);
  Rational b = 0;
  for (std::size_t i = 0; i < ad.rows(); ++i)
    for (std::size_t j = 0; j < ad.cols(); ++j) b += abs(ad(i, j));
  mpz_class c = b.get_num() / b.get_den() + 1;
  return static_cast<int>(c.get_si());
}

std::string describe(const LieAlgebra& g, const Vec& v) { return format_element(g, v); }

}  // namespace

std::vector<Vec> default_slice_basis(const LieAlgebra& g, const SL2Triple& t) {
  const std::size_t n = g.dim();
  Matrix adf = g.ad(t.f), adh = g.ad(t.h);
  int bound = eigen_bound(g, t.h);
  std::vector<Vec> out;
  for (int lam = -bound; lam <= bound; ++lam) {
    auto space = stack_nullspace({adf, shifted(adh, lam)}, n);
    for (auto& v : normalized_basis(space, n)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> default_complement_basis(const LieAlgebra& g, const SL2Triple& t) {
  const std::size_t n = g.dim();
  Matrix adh = g.ad(t.h);
  int bound = eigen_bound(g, t.h);
  std::vector<Vec> out;
  for (int lam = -bound; lam <= bound; ++lam) {
    std::vector<Vec> images;
    for (const auto& v : nullspace(shifted(adh, lam - 2))) images.push_back(g.bracket(t.e, v));
    for (auto& v : span_basis(images, n)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> graded_complement_basis(const LieAlgebra& g, const SL2Triple& t, const Grading& gr) {
  const std::size_t n = g.dim();
  std::vector<Vec> out;
  for (int j = gr.min_degree(); j <= gr.max_degree(); ++j) {
    std::vector<Vec> images;
    for (auto i : gr.piece(j - 2)) images.push_back(g.bracket(t.e, unit_vec(n, i)));
    for (auto& v : span_basis(images, n)) out.push_back(std::move(v));
  }
  return out;
}

SetupPtr derive_subspaces(const SetupInput& in) {
  if (!in.algebra) fail(ErrorCode::InvalidArgument, "setup has no Lie algebra");
  const LieAlgebra& g = *in.algebra;
  const std::size_t n = g.dim();

  if (determinant(g.form_matrix()) == 0) fail(ErrorCode::DegenerateForm, "bilinear form B is degenerate");
  if (auto err = check_triple(g, in.triple)) fail(ErrorCode::BadTriple, "invalid sl2-triple: " + *err);
  auto rep = verify_good_grading(g, in.triple, in.grading);
  if (!rep.ok()) fail(ErrorCode::BadGrading, "grading is not good for f: " + rep.first_failure);
  if (in.a.size() != n) fail(ErrorCode::ShapeMismatch, "element a has wrong length");

  auto out = std::shared_ptr<GradedSetup>(new GradedSetup());
  out->algebra_ = in.algebra;
  out->triple_ = in.triple;
  out->grading_ = in.grading;
  out->a_ = in.a;
  out->name_ = in.name;
  const Vec& e = in.triple.e;
  const Grading& gr = in.grading;
  auto omega = [&](const Vec& x, const Vec& y) { return g.form(e, g.bracket(x, y)); };

  // l and l'
  for (const auto& v : in.isotropic) {
    if (v.size() != n) fail(ErrorCode::ShapeMismatch, "isotropic vector has wrong length");
    if (is_zero(v)) continue;
    if (gr.degree_of(v) != -1) fail(ErrorCode::NotIsotropic, "isotropic vector " + describe(g, v) + " is not in g_-1");
  }
  out->ell_ = independent_subset(in.isotropic, n);
  for (std::size_t i = 0; i < out->ell_.size(); ++i)
    for (std::size_t j = i + 1; j < out->ell_.size(); ++j)
      if (omega(out->ell_[i], out->ell_[j]) != 0)
        fail(ErrorCode::NotIsotropic, "l is not isotropic: omega(" + describe(g, out->ell_[i]) + ", " +
                                          describe(g, out->ell_[j]) + ") != 0");
  auto gm1 = gr.piece(-1);
  {
    Matrix cond(out->ell_.size(), gm1.size());
    for (std::size_t r = 0; r < out->ell_.size(); ++r)
      for (std::size_t c = 0; c < gm1.size(); ++c) cond(r, c) = omega(unit_vec(n, gm1[c]), out->ell_[r]);
    std::vector<Vec> coeffs;
    if (out->ell_.empty()) {
      for (std::size_t c = 0; c < gm1.size(); ++c) coeffs.push_back(unit_vec(gm1.size(), c));
    } else {
      coeffs = nullspace(cond);
    }
    for (const auto& cv : coeffs) {
      Vec v = zero_vec(n);
      for (std::size_t c = 0; c < gm1.size(); ++c) v[gm1[c]] = cv[c];
      out->ell_prime_.push_back(v);
    }
  }

  // g_{<=-2}, ordered by degree then basis index
  std::vector<Vec> low;
  for (int j = gr.min_degree(); j <= -2; ++j)
    for (auto i : gr.piece(j)) low.push_back(unit_vec(n, i));
  out->n_minus_ = out->ell_prime_;
  out->n_minus_.insert(out->n_minus_.end(), low.begin(), low.end());
  out->g_minus_ = low;
  out->g_minus_.insert(out->g_minus_.end(), out->ell_.begin(), out->ell_.end());

  auto closed = [&](const std::vector<Vec>& sub) {
    for (const auto& x : sub)
      for (const auto& y : sub)
        if (!in_span(sub, g.bracket(x, y))) return false;
    return true;
  };
  if (!closed(out->n_minus_)) fail(ErrorCode::BadGrading, "n_- is not a subalgebra");
  if (!closed(out->g_minus_)) fail(ErrorCode::BadGrading, "g_- is not a subalgebra");

  for (const auto& x : out->n_minus_)
    if (!is_zero(g.bracket(in.a, x)))
      fail(ErrorCode::ACondition, "n_- is not contained in ker ad a: [a, " + describe(g, x) + "] != 0");

  // b_- = n_-^perp
  std::vector<Vec> b_minus;
  {
    Matrix m(out->n_minus_.size(), n);
    for (std::size_t r = 0; r < out->n_minus_.size(); ++r) {
      Vec row = g.form_matrix().transpose() * out->n_minus_[r];
      for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    b_minus = out->n_minus_.empty() ? std::vector<Vec>{} : nullspace(m);
    if (out->n_minus_.empty())
      for (std::size_t i = 0; i < n; ++i) b_minus.push_back(unit_vec(n, i));
  }

  // g_f and ker ad e
  out->ker_ad_e_ = nullspace(g.ad(e));
  auto gf_space = nullspace(g.ad(in.triple.f));
  if (gf_space.size() != out->ker_ad_e_.size())
    fail(ErrorCode::BadTriple, "dim g_f != dim ker ad e");
  if (in.slice_basis.empty()) {
    out->slice_ = default_slice_basis(g, in.triple);
  } else {
    out->slice_ = in.slice_basis;
    if (out->slice_.size() != gf_space.size() || rank(out->slice_, n) != gf_space.size())
      fail(ErrorCode::InvalidArgument, "slice basis must be a basis of g_f");
    for (const auto& v : out->slice_)
      if (!is_zero(g.bracket(in.triple.f, v)))
        fail(ErrorCode::InvalidArgument, "slice basis vector " + describe(g, v) + " is not in g_f");
  }

  // complement [e, g] and the frame
  std::vector<Vec> comp = in.complement_basis.empty() ? default_complement_basis(g, in.triple) : in.complement_basis;
  if (comp.size() + out->slice_.size() != n)
    fail(ErrorCode::InvalidArgument, "complement basis must have dim g - dim g_f vectors");
  std::vector<Vec> image;
  for (std::size_t i = 0; i < n; ++i) image.push_back(g.bracket(e, unit_vec(n, i)));
  for (const auto& v : comp)
    if (!in_span(image, v)) fail(ErrorCode::InvalidArgument, "complement vector " + describe(g, v) + " is not in [e, g]");
  std::vector<Vec> full(out->slice_);
  full.insert(full.end(), comp.begin(), comp.end());
  out->frame_ = make_frame(g, full, out->slice_.size());
  for (std::size_t i = 0; i < out->slice_.size(); ++i)
    if (!is_zero(g.bracket(e, out->frame_.dual[i])))
      fail(ErrorCode::Internal, "dual slice vectors do not lie in ker ad e");

  // b_- = [g_-, e] + g_f, direct
  std::vector<Vec> ge;
  for (const auto& x : out->g_minus_) ge.push_back(g.bracket(x, e));
  {
    std::vector<Vec> sum(ge);
    sum.insert(sum.end(), out->slice_.begin(), out->slice_.end());
    if (rank(ge, n) != ge.size() || rank(sum, n) != sum.size() || sum.size() != b_minus.size())
      fail(ErrorCode::BadGrading, "b_- is not the direct sum [g_-, e] + g_f");
    for (const auto& v : sum)
      if (!in_span(b_minus, v)) fail(ErrorCode::BadGrading, "[g_-, e] + g_f is not inside b_-");
  }
  if (in.s_basis.empty()) {
    out->s_basis_ = out->slice_;
    for (const auto& x : out->g_minus_) out->s_basis_.push_back(g.bracket(e, x));
  } else {
    out->s_basis_ = in.s_basis;
    if (out->s_basis_.size() != b_minus.size() || rank(out->s_basis_, n) != b_minus.size())
      fail(ErrorCode::InvalidArgument, "s basis must be a basis of b_-");
    for (std::size_t i = 0; i < out->slice_.size(); ++i)
      if (out->s_basis_[i] != out->slice_[i])
        fail(ErrorCode::InvalidArgument, "s basis must start with the slice basis");
    for (std::size_t i = out->slice_.size(); i < out->s_basis_.size(); ++i)
      if (!in_span(ge, out->s_basis_[i]))
        fail(ErrorCode::InvalidArgument, "s basis vector " + describe(g, out->s_basis_[i]) + " is not in [g_-, e]");
  }
  return out;
}

}  // namespace wred
