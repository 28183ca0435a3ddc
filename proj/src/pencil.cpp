#include "wred/pencil.hpp"

#include "wred/error.hpp"

namespace wred {

MatDiffOp pencil_block(const LieAlgebra& g, const std::vector<Vec>& rows, const std::vector<Vec>& cols,
                       const PointChart& z, const Vec& a) {
  MatDiffOp f(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Rational metric = g.form(rows[i], cols[j]);
      Vec br = g.bracket(rows[i], cols[j]);
      DiffPoly c0(-g.form(br, z.base));
      for (std::size_t k = 0; k < z.directions.size(); ++k) {
        Rational c = g.form(br, z.directions[k]);
        if (c != 0) c0 -= c * DiffPoly::var(static_cast<int>(k));
      }
      Rational ca = g.form(br, a);
      if (ca != 0) c0 -= ca * DiffPoly::lam();
      std::vector<DiffPoly> coeffs{c0};
      if (metric != 0) coeffs.push_back(metric * DiffPoly::eps());
      f(i, j) = LinDiffOp(std::move(coeffs));
    }
  return f;
}

MatDiffOp frame_pencil(const LieAlgebra& g, const Frame& fr, const Vec& e, const Vec& a, PencilDomain domain) {
  PointChart z{e, {}};
  std::size_t fields = domain == PencilDomain::Full ? fr.dim() : fr.slice_dim;
  z.directions.assign(fr.basis.begin(), fr.basis.begin() + static_cast<long>(fields));
  return pencil_block(g, fr.dual, fr.dual, z, a);
}

MatDiffOp lie_poisson_pencil(const GradedSetup& s, PencilDomain domain) {
  return frame_pencil(s.algebra(), s.frame(), s.triple().e, s.a(), domain);
}

MatDiffOp at_lambda(const MatDiffOp& pencil, const Rational& lam) {
  return pencil.map([&](const DiffPoly& c) { return c.subs_lam(lam); });
}

namespace {

int fields_of(const MatDiffOp& p) { return static_cast<int>(p.cols()); }

DiffPoly pair(const std::vector<DiffPoly>& a, const std::vector<DiffPoly>& b) {
  DiffPoly r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

}  // namespace

LocalFunctional bracket(const LocalFunctional& f, const LocalFunctional& g, const MatDiffOp& p) {
  if (p.rows() != p.cols()) fail(ErrorCode::ShapeMismatch, "bracket needs a square operator");
  int n = fields_of(p);
  if (f.density.max_field() >= n || g.density.max_field() >= n)
    fail(ErrorCode::ShapeMismatch, "functional uses more fields than the operator has");
  return LocalFunctional{pair(gradient(f, n), wred::apply(p, gradient(g, n)))};
}

LocalFunctional jacobi_defect(const MatDiffOp& p, const LocalFunctional& f, const LocalFunctional& g,
                              const LocalFunctional& h) {
  LocalFunctional r{bracket(bracket(f, g, p), h, p).density};
  r.density += bracket(bracket(g, h, p), f, p).density;
  r.density += bracket(bracket(h, f, p), g, p).density;
  return r;
}

JacobiEvaluator::JacobiEvaluator(MatDiffOp p, const std::vector<LocalFunctional>& family) : p_(std::move(p)) {
  int n = fields_of(p_);
  for (const auto& f : family) {
    grads_.push_back(gradient(f, n));
    pgrads_.push_back(wred::apply(p_, grads_.back()));
  }
  pair_cache_.resize(grads_.size() * grads_.size());
  cached_.assign(grads_.size() * grads_.size(), false);
}

const std::vector<DiffPoly>& JacobiEvaluator::pair_gradient(std::size_t i, std::size_t j) const {
  std::size_t key = i * grads_.size() + j;
  if (!cached_[key]) {
    pair_cache_[key] = gradient(LocalFunctional{pair(grads_[i], pgrads_[j])}, fields_of(p_));
    cached_[key] = true;
  }
  return pair_cache_[key];
}

bool JacobiEvaluator::vanishes(std::size_t i, std::size_t j, std::size_t k) const {
  LocalFunctional sum{pair(pair_gradient(i, j), pgrads_[k])};
  sum.density += pair(pair_gradient(j, k), pgrads_[i]);
  sum.density += pair(pair_gradient(k, i), pgrads_[j]);
  return functional_is_zero(sum);
}

bool is_skew(const MatDiffOp& p) { return p.rows() == p.cols() && adjoint(p) == -p; }

bool CasimirReport::ok() const {
  if (!closed_under_p2) return false;
  for (const auto& i : items)
    if (!i.p1_casimir) return false;
  return true;
}

namespace {

// Covector coordinates v_J = <b|xi_J>, so that v = sum_J v_J xi^J equals b.
std::vector<DiffPoly> covector(const GradedSetup& s, const Vec& b) {
  std::vector<DiffPoly> v;
  for (const auto& x : s.frame().basis) v.emplace_back(s.algebra().form(b, x));
  return v;
}

}  // namespace

bool is_p1_casimir(const GradedSetup& s, const MatDiffOp& full_pencil, const Vec& b) {
  for (const auto& c : wred::apply(p1_part(full_pencil), covector(s, b)))
    if (!c.is_zero()) return false;
  return true;
}

CasimirReport casimir_set_check(const GradedSetup& s) {
  const LieAlgebra& g = s.algebra();
  MatDiffOp full = lie_poisson_pencil(s, PencilDomain::Full);
  MatDiffOp p2 = p2_part(full);
  CasimirReport rep;
  auto functional_of = [&](const Vec& b) {
    LocalFunctional f;
    auto v = covector(s, b);
    for (std::size_t i = 0; i < v.size(); ++i) f.density += v[i] * DiffPoly::var(static_cast<int>(i));
    return f;
  };
  for (const auto& b : s.n_minus()) {
    CasimirReport::Item it{format_element(g, b), is_p1_casimir(s, full, b)};
    if (!it.p1_casimir && rep.first_failure.empty())
      rep.first_failure = "F_b is not a Casimir of P_1 for b = " + it.element;
    rep.items.push_back(it);
  }
  for (const auto& b : s.n_minus())
    for (const auto& c : s.n_minus()) {
      auto grad = gradient(bracket(functional_of(b), functional_of(c), p2), static_cast<int>(g.dim()));
      Vec x = zero_vec(g.dim());
      bool constant = true;
      for (std::size_t i = 0; i < grad.size(); ++i) {
        if (!grad[i].is_constant()) constant = false;
        x = x + grad[i].constant_term() * s.frame().dual[i];
      }
      if (!constant || !in_span(s.n_minus(), x)) {
        rep.closed_under_p2 = false;
        if (rep.first_failure.empty())
          rep.first_failure = "{F_b, F_c}_2 leaves the Casimir set for b = " + format_element(g, b) +
                              ", c = " + format_element(g, c);
      }
    }
  return rep;
}

}  // namespace wred
