#include "wred/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "wred/error.hpp"

namespace wred {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> structure, Matrix form)
    : labels_(std::move(labels)), structure_(std::move(structure)), form_(std::move(form)) {
  const std::size_t n = labels_.size();
  if (n == 0) fail(ErrorCode::InvalidDimension, "Lie algebra must have positive dimension");
  if (structure_.size() != n || form_.rows() != n || form_.cols() != n)
    fail(ErrorCode::ShapeMismatch, "structure constants / form do not match the basis size");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure_[i].size() != n) fail(ErrorCode::ShapeMismatch, "structure constants are not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure_[i][j].size() != n) fail(ErrorCode::ShapeMismatch, "bracket vector has wrong length");
      if (i < j)
        for (std::size_t k = 0; k < n; ++k)
          if (structure_[i][j][k] != 0) entries_.push_back({i, j, k, structure_[i][j][k]});
    }
  }
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim());
  for (const auto& en : entries_) {
    // [xi_i, xi_j] = c xi_k and [xi_j, xi_i] = -c xi_k
    Rational w = x[en.i] * y[en.j] - x[en.j] * y[en.i];
    if (w != 0) r[en.k] += w * en.c;
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(x, unit_vec(dim(), j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
  }
  return m;
}

Rational LieAlgebra::form(const Vec& x, const Vec& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (form_(i, j) != 0 && y[j] != 0) s += x[i] * form_(i, j) * y[j];
  }
  return s;
}

AlgebraCheck check_algebra(const LieAlgebra& g) {
  AlgebraCheck out;
  const std::size_t n = g.dim();
  auto note = [&](const std::string& msg) {
    if (out.first_failure.empty()) out.first_failure = msg;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.bracket_basis(i, j) != Rational(-1) * g.bracket_basis(j, i)) {
        out.antisymmetric = false;
        note("antisymmetry fails for (" + g.labels()[i] + ", " + g.labels()[j] + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.form_matrix()(i, j) != g.form_matrix()(j, i)) {
        out.invariant = false;
        note("form is not symmetric");
      }
  for (std::size_t i = 0; i < n && out.jacobi; ++i)
    for (std::size_t j = i + 1; j < n && out.jacobi; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
        Vec jac = g.bracket(a, g.bracket(b, c)) + g.bracket(b, g.bracket(c, a)) + g.bracket(c, g.bracket(a, b));
        if (!is_zero(jac)) {
          out.jacobi = false;
          note("Jacobi identity fails for (" + g.labels()[i] + ", " + g.labels()[j] + ", " + g.labels()[k] + ")");
          break;
        }
      }
  for (std::size_t i = 0; i < n && out.invariant; ++i)
    for (std::size_t j = 0; j < n && out.invariant; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        if (g.form(g.bracket(x, y), z) + g.form(y, g.bracket(x, z)) != 0) {
          out.invariant = false;
          note("form is not ad-invariant on (" + g.labels()[i] + ", " + g.labels()[j] + ", " + g.labels()[k] + ")");
          break;
        }
      }
  if (determinant(g.form_matrix()) == 0) {
    out.nondegenerate = false;
    note("bilinear form is degenerate");
  }
  return out;
}

namespace {

using SqMatrix = std::vector<Vec>;

std::string unit_label(int n, int i, int j) {
  std::ostringstream os;
  os << 'e' << i;
  if (n > 9) os << '_';
  os << j;
  return os.str();
}

SqMatrix sl_basis_matrix(int n, std::size_t index) {
  SqMatrix m(n, zero_vec(n));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (k++ == index) {
        m[i][j] = 1;
        return m;
      }
    }
  int d = static_cast<int>(index - k);
  m[d][d] = 1;
  m[d + 1][d + 1] = -1;
  return m;
}

SqMatrix mat_mul(const SqMatrix& a, const SqMatrix& b) {
  std::size_t n = a.size();
  SqMatrix r(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

std::vector<Vec> sl_n_to_matrix(int n, const Vec& x) {
  SqMatrix m(n, zero_vec(n));
  for (std::size_t idx = 0; idx < x.size(); ++idx) {
    if (x[idx] == 0) continue;
    SqMatrix b = sl_basis_matrix(n, idx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] += x[idx] * b[i][j];
  }
  return m;
}

Vec sl_n_from_matrix(int n, const std::vector<Vec>& m) {
  const std::size_t dim = static_cast<std::size_t>(n * n - 1);
  Vec x = zero_vec(dim);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) x[k++] = m[i][j];
  Rational partial = 0;
  for (int d = 0; d + 1 < n; ++d) {
    partial += m[d][d];
    x[k++] = partial;
  }
  return x;
}

LieAlgebra build_sl_n(int n) {
  if (n < 2) fail(ErrorCode::InvalidDimension, "sl_n requires n >= 2, got " + std::to_string(n));
  const std::size_t dim = static_cast<std::size_t>(n * n - 1);
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) labels.push_back(unit_label(n, i, j));
  for (int d = 1; d < n; ++d) labels.push_back("h" + std::to_string(d));

  std::vector<SqMatrix> mats;
  for (std::size_t i = 0; i < dim; ++i) mats.push_back(sl_basis_matrix(n, i));

  std::vector<std::vector<Vec>> structure(dim, std::vector<Vec>(dim));
  Matrix form(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      SqMatrix ab = mat_mul(mats[i], mats[j]);
      SqMatrix ba = mat_mul(mats[j], mats[i]);
      SqMatrix comm(n, zero_vec(n));
      Rational tr = 0;
      for (int r = 0; r < n; ++r) {
        tr += ab[r][r];
        for (int c = 0; c < n; ++c) comm[r][c] = ab[r][c] - ba[r][c];
      }
      structure[i][j] = sl_n_from_matrix(n, comm);
      form(i, j) = tr;
    }
  return LieAlgebra(std::move(labels), std::move(structure), std::move(form));
}

Vec parse_element(const LieAlgebra& g, std::string_view expr) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::Parse, "empty element expression");
  Vec x = zero_vec(g.dim());
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) fail(ErrorCode::Parse, "malformed element expression '" + std::string(expr) + "'");
    Rational coef = 1;
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = parse_rational(term.substr(0, star));
      label = term.substr(star + 1);
    }
    auto idx = g.index_of(label);
    if (!idx) fail(ErrorCode::Parse, "unknown basis label '" + label + "' in '" + std::string(expr) + "'");
    x[*idx] += sign * coef;
    pos = end;
  }
  return x;
}

std::string format_element(const LieAlgebra& g, const Vec& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational c = x[i];
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (a != 1) out += to_string(a) + "*";
    out += g.labels()[i];
  }
  return out.empty() ? "0" : out;
}

bool is_nilpotent(const LieAlgebra& g, const Vec& x) {
  Matrix ad = g.ad(x);
  Matrix p = ad;
  for (std::size_t k = 1; k < g.dim(); ++k) p = p * ad;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (p(i, j) != 0) return false;
  return true;
}

std::optional<std::string> check_triple(const LieAlgebra& g, const SL2Triple& t) {
  const std::size_t n = g.dim();
  if (t.e.size() != n || t.h.size() != n || t.f.size() != n) return "sl2-triple vectors have wrong length";
  if (is_zero(t.f) || is_zero(t.e)) return "sl2-triple is degenerate (e or f is zero)";
  if (g.bracket(t.h, t.e) != Rational(2) * t.e) return "[h,e] != 2e";
  if (g.bracket(t.h, t.f) != Rational(-2) * t.f) return "[h,f] != -2f";
  if (g.bracket(t.e, t.f) != t.h) return "[e,f] != h";
  if (!is_nilpotent(g, t.e)) return "e is not nilpotent";
  if (!is_nilpotent(g, t.f)) return "f is not nilpotent";
  return std::nullopt;
}

SL2Triple sl2_from_partition(const LieAlgebra& g, int n, const std::vector<int>& partition) {
  if (g.dim() != static_cast<std::size_t>(n * n - 1))
    fail(ErrorCode::InvalidArgument, "partition construction needs the builtin sl_n");
  int total = 0;
  for (int p : partition) {
    if (p <= 0) fail(ErrorCode::InvalidArgument, "partition parts must be positive");
    total += p;
  }
  if (total != n)
    fail(ErrorCode::InvalidArgument, "partition sums to " + std::to_string(total) + ", expected " + std::to_string(n));
  std::vector<int> parts(partition);
  std::sort(parts.rbegin(), parts.rend());
  if (parts.front() == 1) fail(ErrorCode::BadTriple, "partition [1,...,1] gives the zero orbit (f = 0)");

  struct Slot {
    int weight, block, pos;
  };
  std::vector<Slot> slots;
  for (int b = 0; b < static_cast<int>(parts.size()); ++b)
    for (int k = 0; k < parts[b]; ++k) slots.push_back({parts[b] - 1 - 2 * k, b, k});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.weight > y.weight; });
  auto where = [&](int b, int k) {
    for (int i = 0; i < n; ++i)
      if (slots[i].block == b && slots[i].pos == k) return i;
    return -1;
  };

  std::vector<Vec> e(n, zero_vec(n)), h(n, zero_vec(n)), f(n, zero_vec(n));
  for (int i = 0; i < n; ++i) h[i][i] = slots[i].weight;
  for (int b = 0; b < static_cast<int>(parts.size()); ++b) {
    int d = parts[b];
    for (int k = 0; k + 1 < d; ++k) {
      int from = where(b, k), to = where(b, k + 1);
      f[to][from] = 1;                 // f v_k = v_{k+1}
      e[from][to] = (k + 1) * (d - 1 - k);  // e v_{k+1} = (k+1)(d-1-k) v_k
    }
  }
  SL2Triple t{sl_n_from_matrix(n, e), sl_n_from_matrix(n, h), sl_n_from_matrix(n, f)};
  if (auto err = check_triple(g, t)) fail(ErrorCode::Internal, "partition triple invalid: " + *err);
  return t;
}

}  // namespace wred
