#include "wred/grading.hpp"

#include <algorithm>

#include "wred/error.hpp"

namespace wred {

int Grading::min_degree() const { return deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end()); }
int Grading::max_degree() const { return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end()); }

std::vector<std::size_t> Grading::piece(int j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == j) out.push_back(i);
  return out;
}

std::optional<int> Grading::degree_of(const Vec& x) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (d && *d != deg[i]) return std::nullopt;
    d = deg[i];
  }
  return d;
}

Vec Grading::component(const Vec& x, int j) const {
  Vec r = zero_vec(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (deg[i] == j) r[i] = x[i];
  return r;
}

Grading dynkin_grading(const LieAlgebra& g, const Vec& h) {
  Matrix ad = g.ad(h);
  Grading gr;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (i != j && ad(i, j) != 0)
        fail(ErrorCode::BadGrading, "ad h is not diagonal on basis vector " + g.labels()[j]);
    if (ad(i, i).get_den() != 1)
      fail(ErrorCode::BadGrading, "ad h has non-integer eigenvalue on " + g.labels()[i]);
    gr.deg.push_back(static_cast<int>(ad(i, i).get_num().get_si()));
  }
  return gr;
}

Grading grading_from_matrix(const LieAlgebra& g, int n, const std::vector<std::vector<int>>& table) {
  if (g.dim() != static_cast<std::size_t>(n * n - 1) || static_cast<int>(table.size()) != n)
    fail(ErrorCode::BadGrading, "degree table must be " + std::to_string(n) + "x" + std::to_string(n));
  Grading gr;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) fail(ErrorCode::BadGrading, "degree table row has wrong length");
    if (table[i][i] != 0) fail(ErrorCode::BadGrading, "diagonal entries of a degree table must be 0");
    for (int j = 0; j < n; ++j)
      if (i != j) gr.deg.push_back(table[i][j]);
  }
  for (int d = 1; d < n; ++d) gr.deg.push_back(0);
  return gr;
}

bool GoodGradingReport::ok() const {
  if (!respects_bracket || !f_in_minus2 || !h_in_0 || !e_in_2) return false;
  return std::all_of(levels.begin(), levels.end(), [](const Level& l) { return l.ok; });
}

GoodGradingReport verify_good_grading(const LieAlgebra& g, const SL2Triple& t, const Grading& gr) {
  GoodGradingReport rep;
  auto note = [&](const std::string& msg) {
    if (rep.first_failure.empty()) rep.first_failure = msg;
  };
  const std::size_t n = g.dim();
  if (gr.deg.size() != n) {
    rep.respects_bracket = false;
    note("grading has " + std::to_string(gr.deg.size()) + " degrees for a " + std::to_string(n) + "-dimensional algebra");
    return rep;
  }
  for (const auto& en : g.entries())
    if (gr.deg[en.k] != gr.deg[en.i] + gr.deg[en.j]) {
      rep.respects_bracket = false;
      note("[" + g.labels()[en.i] + ", " + g.labels()[en.j] + "] leaves g_" + std::to_string(gr.deg[en.i] + gr.deg[en.j]));
      break;
    }
  auto in_piece = [&](const Vec& x, int j) { return !is_zero(x) && gr.degree_of(x) == j; };
  rep.f_in_minus2 = in_piece(t.f, -2);
  if (!rep.f_in_minus2) note("f is not in g_-2");
  rep.h_in_0 = is_zero(t.h) || gr.degree_of(t.h) == 0;
  if (!rep.h_in_0) note("h is not in g_0");
  rep.e_in_2 = in_piece(t.e, 2);
  if (!rep.e_in_2) note("e is not in g_2");

  Matrix adf = g.ad(t.f);
  for (int j = gr.min_degree(); j <= gr.max_degree(); ++j) {
    auto src = gr.piece(j);
    auto dst = gr.piece(j - 2);
    GoodGradingReport::Level lv;
    lv.j = j;
    lv.dim = src.size();
    lv.target = dst.size();
    Matrix block(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t r = 0; r < dst.size(); ++r) block(r, c) = adf(dst[r], src[c]);
    lv.rank = (src.empty() || dst.empty()) ? 0 : rank(block);
    lv.injective_required = j >= 1;
    lv.surjective_required = j <= 1;
    if (lv.injective_required && lv.rank != lv.dim) lv.ok = false;
    if (lv.surjective_required && lv.rank != lv.target) lv.ok = false;
    if (!lv.ok) note("ad f : g_" + std::to_string(j) + " -> g_" + std::to_string(j - 2) + " fails " +
                     (lv.injective_required && lv.rank != lv.dim ? "injectivity" : "surjectivity"));
    rep.levels.push_back(lv);
  }
  // Also need surjectivity onto pieces whose source is empty (j-2 in range, j above max).
  for (int j = gr.max_degree() + 1; j <= gr.max_degree() + 2; ++j) {
    auto dst = gr.piece(j - 2);
    if (j <= 1 && !dst.empty()) {
      GoodGradingReport::Level lv{j, 0, dst.size(), 0, false, true, false};
      note("ad f : g_" + std::to_string(j) + " -> g_" + std::to_string(j - 2) + " fails surjectivity");
      rep.levels.push_back(lv);
    }
  }
  return rep;
}

}  // namespace wred
