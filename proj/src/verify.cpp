#include "wred/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "wred/error.hpp"

namespace wred {

namespace {

using Key = std::pair<int, Monomial>;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (a.first != b.first) return a.first < b.first;
    return MonomialLess{}(a.second, b.second);
  }
};

using SparseRow = std::map<Key, Rational, KeyLess>;

// Incremental row echelon form over sparse rows; pivot is the first key.
class SparseEchelon {
public:
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto it = rows_.find(row.begin()->first);
      if (it == rows_.end()) {
        Key k = row.begin()->first;
        rows_.emplace(k, std::move(row));
        return true;
      }
      Rational f = row.begin()->second / it->second.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto [pos, inserted] = row.try_emplace(k, -f * c);
        if (!inserted) {
          pos->second -= f * c;
          if (pos->second == 0) row.erase(pos);
        }
      }
    }
    return false;
  }

private:
  std::map<Key, SparseRow, KeyLess> rows_;
};

void enumerate(int nfields, int budget, std::vector<Jet>& current, std::size_t min_index,
               const std::vector<Jet>& jets, std::vector<std::vector<Jet>>& out) {
  if (!current.empty()) out.push_back(current);
  for (std::size_t i = min_index; i < jets.size(); ++i) {
    int w = 1 + jets[i].order;
    if (w > budget) continue;
    current.push_back(jets[i]);
    enumerate(nfields, budget - w, current, i, jets, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<LocalFunctional> monomial_family(int nfields, int max_weight) {
  std::vector<Jet> jets;
  for (int k = 0; k < max_weight; ++k)
    for (int f = 0; f < nfields; ++f) jets.push_back({f, k});
  std::vector<std::vector<Jet>> monos;
  std::vector<Jet> cur;
  enumerate(nfields, max_weight, cur, 0, jets, monos);
  std::stable_sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
    int wa = 0, wb = 0;
    for (auto j : a) wa += 1 + j.order;
    for (auto j : b) wb += 1 + j.order;
    return wa < wb;
  });
  SparseEchelon ech;
  std::vector<LocalFunctional> out;
  for (const auto& m : monos) {
    DiffPoly d(1);
    for (auto j : m) d = d * DiffPoly::var(j.field, j.order);
    LocalFunctional f{d};
    SparseRow row;
    for (int i = 0; i < nfields; ++i) {
      DiffPoly grad = variational_derivative(f, i);
      for (const auto& [mono, c] : grad.terms()) row[{i, mono}] = c;
    }
    if (ech.insert(std::move(row))) out.push_back(f);
  }
  return out;
}

std::string jacobi_failure(const MatDiffOp& p, const std::vector<LocalFunctional>& family) {
  JacobiEvaluator ev(p, family);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      for (std::size_t k = j + 1; k < family.size(); ++k)
        if (!ev.vanishes(i, j, k))
          return "Jacobi fails for densities " + to_string(family[i].density, "q") + ", " +
                 to_string(family[j].density, "q") + ", " + to_string(family[k].density, "q");
  return {};
}

std::vector<std::vector<Rational>> finite_slice_dirac(const GradedSetup& s, const Vec& q) {
  const LieAlgebra& g = s.algebra();
  const Frame& fr = s.frame();
  const std::size_t n = g.dim(), m = s.slice_dim();
  Vec z = s.triple().e;
  for (std::size_t i = 0; i < m; ++i) z = z + q[i] * fr.basis[i];
  Matrix full(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) full(i, j) = -g.form(g.bracket(fr.dual[i], fr.dual[j]), z);
  Matrix minor(n - m, n - m);
  for (std::size_t a = m; a < n; ++a)
    for (std::size_t b = m; b < n; ++b) minor(a - m, b - m) = full(a, b);
  auto inv = inverse(minor);
  if (!inv) fail(ErrorCode::NoFiniteOrderInverse, "finite constraint matrix is singular at this point");
  std::vector<std::vector<Rational>> out(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational v = full(i, j);
      for (std::size_t a = m; a < n; ++a)
        for (std::size_t b = m; b < n; ++b)
          if (full(i, a) != 0 && full(b, j) != 0) v -= full(i, a) * (*inv)(a - m, b - m) * full(b, j);
      out[i][j] = v;
    }
  return out;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json VerifyReport::to_json() const {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"setup", setup}, {"checks", arr}, {"passed", passed()}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "# verify: " << setup << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

namespace {

SetupPtr setup_for_grading(const json& problem, const std::string& name) {
  json p = problem;
  p["grading"] = name;
  p.erase("name");
  p.erase("s_basis");
  p.erase("complement_basis");
  try {
    return resolve_setup(p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ACondition && e.code() != ErrorCode::NotIsotropic) throw;
  }
  // a = f is admissible for every good grading of the triple
  p.erase("isotropic");
  p["a"] = "f";
  return resolve_setup(p);
}

}  // namespace

VerifyReport verify_problem(const json& problem, const VerifyOptions& opt) {
  VerifyReport rep;
  SetupPtr s = resolve_setup(problem);
  rep.setup = s->name();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  ComparisonReport cmp = compare_methods({s}, {Method::Tensor, Method::Dirac, Method::DS});
  add("method_agreement", cmp.all_equal, cmp.first_mismatch);
  MatDiffOp pencil;
  for (std::size_t i = 0; i < cmp.runs.size(); ++i)
    if (cmp.runs[i].error.empty()) {
      pencil = cmp.results[i];
      break;
    }
  if (pencil.rows() == 0) return rep;
  MatDiffOp p1 = p1_part(pencil), p2 = p2_part(pencil);

  add("skew", is_skew(p1) && is_skew(p2), is_skew(p2) ? (is_skew(p1) ? "" : "P1 is not skew") : "P2 is not skew");
  add("lambda_linear", pencil.lam_degree() <= 1,
      pencil.lam_degree() <= 1 ? "" : "lambda degree " + std::to_string(pencil.lam_degree()));

  if (opt.jacobi) {
    auto family = monomial_family(static_cast<int>(s->slice_dim()), opt.jacobi_weight);
    std::string fail_msg = jacobi_failure(p2, family);
    if (fail_msg.empty()) fail_msg = jacobi_failure(p1, family);
    for (const auto& l : opt.lambdas) {
      if (!fail_msg.empty()) break;
      fail_msg = jacobi_failure(at_lambda(pencil, l), family);
      if (!fail_msg.empty()) fail_msg = "lambda = " + to_string(l) + ": " + fail_msg;
    }
    add("jacobi", fail_msg.empty(),
        fail_msg.empty() ? std::to_string(family.size()) + " densities, P2, P1 and " + std::to_string(opt.lambdas.size()) + " lambda values" : fail_msg);
  }

  CasimirReport cas = casimir_set_check(*s);
  add("casimir", cas.ok(), cas.first_failure);

  {
    auto lead = leading_term(p2);
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::string detail;
    bool polynomial = true;
    for (const auto& row : lead)
      for (const auto& c : row)
        if (c.max_order() > 0) polynomial = false;
    for (int trial = 0; trial < 3 && detail.empty(); ++trial) {
      Vec q;
      for (std::size_t i = 0; i < s->slice_dim(); ++i) q.push_back(make_rational(dist(rng), 1 + (dist(rng) + 9) % 4));
      auto finite = finite_slice_dirac(*s, q);
      auto jet = [&](Jet j) { return j.order == 0 ? q[static_cast<std::size_t>(j.field)] : Rational(0); };
      for (std::size_t i = 0; i < lead.size() && detail.empty(); ++i)
        for (std::size_t j = 0; j < lead.size() && detail.empty(); ++j)
          if (lead[i][j].evaluate(jet, 0, 0) != finite[i][j])
            detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs from the finite Dirac reduction";
    }
    if (!polynomial) detail = "leading term contains derivatives";
    add("leading_term", detail.empty(), detail);
  }

  if (!opt.gradings.empty()) {
    std::vector<SetupPtr> setups;
    std::string detail;
    for (const auto& name : opt.gradings) setups.push_back(setup_for_grading(problem, name));
    MatDiffOp ref = p2_part(tensor_procedure(*setups.front()));
    for (std::size_t i = 0; i < setups.size() && detail.empty(); ++i)
      for (auto m : {Method::Tensor, Method::Dirac, Method::DS})
        if (!(p2_part(reduce(*setups[i], m)) == ref)) {
          detail = setups[i]->name() + " (" + method_name(m) + ") gives a different P2";
          break;
        }
    if (detail.empty() && !(ref == p2)) detail = "named gradings differ from the problem's own P2";
    add("grading_independence", detail.empty(), detail);
  }

  if (opt.golden) {
    const std::string& st = opt.golden->structure;
    MatDiffOp which = st == "P1" ? p1 : (st == "P2" ? p2 : pencil);
    auto diff = first_table_difference(*opt.golden, make_table(which, s->name(), st));
    add("golden", !diff, diff ? "first differing entry:\n     " + *diff : "");
  }
  return rep;
}

}  // namespace wred
