#include "wred/diffop.hpp"

#include <algorithm>

#include "wred/error.hpp"

namespace wred {

namespace {

const DiffPoly kZero;

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace

LinDiffOp::LinDiffOp(DiffPoly a0) {
  c_.push_back(std::move(a0));
  trim();
}

LinDiffOp::LinDiffOp(std::vector<DiffPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

LinDiffOp LinDiffOp::d(int k) {
  std::vector<DiffPoly> c(static_cast<std::size_t>(k) + 1);
  c.back() = DiffPoly(1);
  return LinDiffOp(std::move(c));
}

const DiffPoly& LinDiffOp::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

void LinDiffOp::add(int k, const DiffPoly& p) {
  if (p.is_zero()) return;
  if (static_cast<int>(c_.size()) <= k) c_.resize(static_cast<std::size_t>(k) + 1);
  c_[static_cast<std::size_t>(k)] += p;
  trim();
}

void LinDiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LinDiffOp& LinDiffOp::operator+=(const LinDiffOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

LinDiffOp& LinDiffOp::operator-=(const LinDiffOp& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

LinDiffOp LinDiffOp::operator-() const {
  LinDiffOp r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

LinDiffOp LinDiffOp::map(const std::function<DiffPoly(const DiffPoly&)>& f) const {
  std::vector<DiffPoly> c;
  c.reserve(c_.size());
  for (const auto& p : c_) c.push_back(f(p));
  return LinDiffOp(std::move(c));
}

LinDiffOp operator+(LinDiffOp a, const LinDiffOp& b) { return a += b; }
LinDiffOp operator-(LinDiffOp a, const LinDiffOp& b) { return a -= b; }

LinDiffOp operator*(const DiffPoly& p, const LinDiffOp& a) {
  std::vector<DiffPoly> c;
  for (const auto& x : a.coeffs()) c.push_back(p * x);
  return LinDiffOp(std::move(c));
}

// (a D^k)(b D^l) = a sum_r C(k,r) b^{(r)} D^{k-r+l}
LinDiffOp compose(const LinDiffOp& a, const LinDiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<DiffPoly> out(static_cast<std::size_t>(a.order() + b.order()) + 1);
  for (int l = 0; l <= b.order(); ++l) {
    const DiffPoly& bl = b.coeff(l);
    if (bl.is_zero()) continue;
    std::vector<DiffPoly> derivs{bl};
    for (int k = 0; k <= a.order(); ++k) {
      const DiffPoly& ak = a.coeff(k);
      if (ak.is_zero()) continue;
      while (static_cast<int>(derivs.size()) <= k) derivs.push_back(total_derivative(derivs.back()));
      for (int r = 0; r <= k; ++r) {
        if (derivs[static_cast<std::size_t>(r)].is_zero()) continue;
        out[static_cast<std::size_t>(k - r + l)] += binomial(k, r) * (ak * derivs[static_cast<std::size_t>(r)]);
      }
    }
  }
  return LinDiffOp(std::move(out));
}

// (a D^k)* = (-1)^k sum_r C(k,r) a^{(k-r)} D^r
LinDiffOp adjoint(const LinDiffOp& a) {
  if (a.is_zero()) return {};
  std::vector<DiffPoly> out(static_cast<std::size_t>(a.order()) + 1);
  for (int k = 0; k <= a.order(); ++k) {
    const DiffPoly& ak = a.coeff(k);
    if (ak.is_zero()) continue;
    std::vector<DiffPoly> derivs{ak};
    for (int i = 1; i <= k; ++i) derivs.push_back(total_derivative(derivs.back()));
    Rational sign = (k % 2) ? -1 : 1;
    for (int r = 0; r <= k; ++r)
      out[static_cast<std::size_t>(r)] += (sign * binomial(k, r)) * derivs[static_cast<std::size_t>(k - r)];
  }
  return LinDiffOp(std::move(out));
}

DiffPoly apply(const LinDiffOp& a, const DiffPoly& v) {
  DiffPoly r;
  DiffPoly dv = v;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) dv = total_derivative(dv);
    if (dv.is_zero()) break;
    if (!a.coeff(k).is_zero()) r += a.coeff(k) * dv;
  }
  return r;
}

MatDiffOp MatDiffOp::identity(std::size_t n) {
  MatDiffOp m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LinDiffOp(DiffPoly(1));
  return m;
}

bool MatDiffOp::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const LinDiffOp& x) { return x.is_zero(); });
}

int MatDiffOp::order() const {
  int r = -1;
  for (const auto& x : e_) r = std::max(r, x.order());
  return r;
}

int MatDiffOp::eps_degree() const {
  int r = -1;
  for (const auto& x : e_)
    for (const auto& c : x.coeffs()) r = std::max(r, c.eps_degree());
  return r;
}

int MatDiffOp::lam_degree() const {
  int r = -1;
  for (const auto& x : e_)
    for (const auto& c : x.coeffs()) r = std::max(r, c.lam_degree());
  return r;
}

MatDiffOp MatDiffOp::transpose() const {
  MatDiffOp t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatDiffOp MatDiffOp::map(const std::function<DiffPoly(const DiffPoly&)>& f) const {
  MatDiffOp r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].map(f);
  return r;
}

MatDiffOp MatDiffOp::block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  MatDiffOp r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
  return r;
}

MatDiffOp& MatDiffOp::operator+=(const MatDiffOp& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "operator sum: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatDiffOp& MatDiffOp::operator-=(const MatDiffOp& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "operator difference: shape mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatDiffOp MatDiffOp::operator-() const {
  MatDiffOp r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b) { return a += b; }
MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b) { return a -= b; }

MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "compose: inner dimensions differ");
  MatDiffOp r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += compose(a(i, k), b(k, j));
    }
  return r;
}

MatDiffOp adjoint(const MatDiffOp& a) {
  MatDiffOp r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = adjoint(a(i, j));
  return r;
}

std::vector<DiffPoly> apply(const MatDiffOp& a, const std::vector<DiffPoly>& v) {
  if (v.size() != a.cols()) fail(ErrorCode::ShapeMismatch, "apply: vector length differs from operator columns");
  std::vector<DiffPoly> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) r[i] += apply(a(i, j), v[j]);
  return r;
}

MatDiffOp lam_part(const MatDiffOp& a, int p) {
  return a.map([p](const DiffPoly& c) { return c.lam_coeff(p); });
}

MatDiffOp eps_part(const MatDiffOp& a, int q) {
  return a.map([q](const DiffPoly& c) { return c.eps_coeff(q); });
}

MatDiffOp frechet_derivative(const std::vector<DiffPoly>& q, int nfields) {
  MatDiffOp r(q.size(), static_cast<std::size_t>(nfields));
  for (std::size_t i = 0; i < q.size(); ++i) {
    int top = q[i].max_order();
    for (int j = 0; j < nfields; ++j)
      for (int k = 0; k <= top; ++k) r(i, static_cast<std::size_t>(j)).add(k, partial(q[i], Jet{j, k}));
  }
  return r;
}

std::string to_string(const LinDiffOp& a, std::string_view var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int k = a.order(); k >= 0; --k) {
    if (a.coeff(k).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(a.coeff(k), var) + ")";
    if (k == 1) out += "*D";
    else if (k > 1) out += "*D^" + std::to_string(k);
  }
  return out;
}

}  // namespace wred
