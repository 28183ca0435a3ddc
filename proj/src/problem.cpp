#include "wred/problem.hpp"

#include <sstream>

#include "wred/error.hpp"

namespace wred {

namespace {

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail(ErrorCode::Parse, "expected an integer or a \"p/q\" string, got " + v.dump());
}

Vec coefficients(const json& v, std::size_t n) {
  if (v.size() != n) fail(ErrorCode::ShapeMismatch, "coefficient array has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  Vec x;
  for (const auto& c : v) x.push_back(rational_of(c));
  return x;
}

Vec element(const LieAlgebra& g, const json& v, const SL2Triple* t) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (t && s == "e") return t->e;
    if (t && s == "h") return t->h;
    if (t && s == "f") return t->f;
    return parse_element(g, s);
  }
  if (v.is_array()) return coefficients(v, g.dim());
  fail(ErrorCode::Parse, "element must be an expression string or a coefficient array");
}

std::vector<Vec> elements(const LieAlgebra& g, const json& v, const SL2Triple* t) {
  if (!v.is_array()) fail(ErrorCode::Parse, "expected a list of elements");
  std::vector<Vec> out;
  for (const auto& x : v) out.push_back(element(g, x, t));
  return out;
}

json coeff_json(const Vec& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(to_string(c));
  return a;
}

int builtin_rank(const std::string& name) {
  if (name.size() < 3 || name.compare(0, 2, "sl") != 0)
    fail(ErrorCode::InvalidArgument, "unknown builtin algebra '" + name + "' (expected slN)");
  try {
    std::size_t used = 0;
    int n = std::stoi(name.substr(2), &used);
    if (used != name.size() - 2) throw std::invalid_argument(name);
    return n;
  } catch (const std::logic_error&) {
    fail(ErrorCode::InvalidArgument, "unknown builtin algebra '" + name + "' (expected slN)");
  }
}

}  // namespace

AlgebraPtr load_algebra(const json& j) {
  try {
    std::size_t n = j.at("dim").get<std::size_t>();
    if (n == 0) fail(ErrorCode::InvalidDimension, "algebra dimension must be positive");
    auto labels = j.at("basis").get<std::vector<std::string>>();
    if (labels.size() != n) fail(ErrorCode::ShapeMismatch, "basis has " + std::to_string(labels.size()) + " labels for dim " + std::to_string(n));
    std::vector<std::vector<Vec>> st(n, std::vector<Vec>(n, zero_vec(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    for (const auto& b : j.at("brackets")) {
      std::size_t I = b.at(0).get<std::size_t>(), J = b.at(1).get<std::size_t>();
      if (I >= n || J >= n) fail(ErrorCode::ShapeMismatch, "bracket index out of range");
      Vec v = zero_vec(n);
      for (const auto& kc : b.at(2)) {
        std::size_t K = kc.at(0).get<std::size_t>();
        if (K >= n) fail(ErrorCode::ShapeMismatch, "bracket result index out of range");
        v[K] += rational_of(kc.at(1));
      }
      if (given[I][J]) fail(ErrorCode::Parse, "bracket pair given twice");
      if (given[J][I] && st[J][I] != Rational(-1) * v)
        fail(ErrorCode::InvalidArgument, "brackets are not antisymmetric for pair " + std::to_string(I) + "," + std::to_string(J));
      if (I == J && !is_zero(v)) fail(ErrorCode::InvalidArgument, "[x, x] must vanish");
      given[I][J] = given[J][I] = true;
      st[I][J] = v;
      st[J][I] = Rational(-1) * v;
    }
    const auto& f = j.at("form");
    if (f.size() != n) fail(ErrorCode::ShapeMismatch, "form must be dim x dim");
    Matrix form(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (f[r].size() != n) fail(ErrorCode::ShapeMismatch, "form must be dim x dim");
      for (std::size_t c = 0; c < n; ++c) form(r, c) = rational_of(f[r][c]);
    }
    auto g = std::make_shared<LieAlgebra>(labels, st, form);
    auto chk = check_algebra(*g);
    if (!chk.nondegenerate) fail(ErrorCode::DegenerateForm, "algebra file: " + chk.first_failure);
    if (!chk.ok()) fail(ErrorCode::InvalidArgument, "algebra file: " + chk.first_failure);
    return g;
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("algebra file: ") + e.what());
  }
}

json algebra_to_json(const LieAlgebra& g) {
  json br = json::array();
  for (const auto& en : g.entries()) {
    // group by pair
    if (!br.empty() && br.back()[0] == en.i && br.back()[1] == en.j) {
      br.back()[2].push_back({en.k, to_string(en.c)});
    } else {
      br.push_back({en.i, en.j, json::array({json::array({en.k, to_string(en.c)})})});
    }
  }
  json form = json::array();
  for (std::size_t r = 0; r < g.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.dim(); ++c) row.push_back(to_string(g.form_matrix()(r, c)));
    form.push_back(row);
  }
  return {{"dim", g.dim()}, {"basis", g.labels()}, {"brackets", br}, {"form", form}};
}

std::vector<std::vector<int>> sl3_minimal_grading(const std::string& name) {
  if (name == "G1") return {{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}};
  if (name == "G2") return {{0, 0, 2}, {0, 0, 2}, {-2, -2, 0}};
  if (name == "G3") return {{0, 2, 2}, {-2, 0, 0}, {-2, 0, 0}};
  fail(ErrorCode::InvalidArgument, "unknown grading name '" + name + "' (expected dynkin, G1, G2 or G3)");
}

SetupPtr resolve_setup(const json& p) {
  if (!p.is_object()) fail(ErrorCode::Parse, "problem must be a JSON object");
  try {
    SetupInput in;
    int n = 0;
    if (p.contains("builtin")) {
      n = builtin_rank(p.at("builtin").get<std::string>());
      in.algebra = std::make_shared<LieAlgebra>(build_sl_n(n));
    } else if (p.contains("algebra")) {
      in.algebra = load_algebra(p.at("algebra"));
    } else {
      fail(ErrorCode::InvalidArgument, "problem needs either 'builtin' or 'algebra'");
    }
    const LieAlgebra& g = *in.algebra;
    if (p.contains("triple")) {
      const auto& t = p.at("triple");
      in.triple = {element(g, t.at("e"), nullptr), element(g, t.at("h"), nullptr), element(g, t.at("f"), nullptr)};
    } else if (n > 0 && p.contains("partition")) {
      in.triple = sl2_from_partition(g, n, p.at("partition").get<std::vector<int>>());
    } else {
      fail(ErrorCode::InvalidArgument, "problem needs a 'triple' (or 'partition' with a builtin algebra)");
    }
    if (auto err = check_triple(g, in.triple)) fail(ErrorCode::BadTriple, "invalid sl2-triple: " + *err);

    json gj = p.value("grading", json("dynkin"));
    std::string gname = gj.is_string() ? gj.get<std::string>() : "custom";
    if (gj.is_string() && gname == "dynkin") {
      in.grading = dynkin_grading(g, in.triple.h);
    } else if (gj.is_string()) {
      if (n != 3) fail(ErrorCode::InvalidArgument, "named gradings G1, G2, G3 exist only for sl3");
      if (in.triple.f != parse_element(g, "e31"))
        fail(ErrorCode::InvalidArgument, "named gradings G1, G2, G3 are for the triple with f = e31 (partition 2,1)");
      in.grading = grading_from_matrix(g, 3, sl3_minimal_grading(gname));
    } else if (gj.is_array() && !gj.empty() && gj[0].is_array()) {
      if (n == 0) fail(ErrorCode::InvalidArgument, "degree tables need a builtin slN algebra");
      in.grading = grading_from_matrix(g, n, gj.get<std::vector<std::vector<int>>>());
    } else if (gj.is_array()) {
      in.grading.deg = gj.get<std::vector<int>>();
      if (in.grading.deg.size() != g.dim()) fail(ErrorCode::BadGrading, "grading needs one degree per basis vector");
    } else {
      fail(ErrorCode::Parse, "grading must be a name, a degree list or a degree table");
    }

    if (p.contains("isotropic")) in.isotropic = elements(g, p.at("isotropic"), &in.triple);
    in.a = element(g, p.value("a", json("f")), &in.triple);
    if (p.contains("slice_basis")) in.slice_basis = elements(g, p.at("slice_basis"), &in.triple);
    if (p.contains("complement_basis")) in.complement_basis = elements(g, p.at("complement_basis"), &in.triple);
    if (p.contains("s_basis")) in.s_basis = elements(g, p.at("s_basis"), &in.triple);
    if (p.contains("name")) {
      in.name = p.at("name").get<std::string>();
    } else {
      std::ostringstream os;
      os << (p.contains("builtin") ? p.at("builtin").get<std::string>() : std::string("algebra")) << " " << gname;
      if (!in.isotropic.empty()) {
        os << " l=";
        for (std::size_t i = 0; i < in.isotropic.size(); ++i) os << (i ? "," : "") << format_element(g, in.isotropic[i]);
      }
      os << " a=" << format_element(g, in.a);
      in.name = os.str();
    }
    return derive_subspaces(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("problem: ") + e.what());
  }
}

json setup_to_json(const GradedSetup& s) {
  json iso = json::array(), slice = json::array(), comp = json::array(), sb = json::array();
  for (const auto& v : s.ell()) iso.push_back(coeff_json(v));
  for (const auto& v : s.slice_basis()) slice.push_back(coeff_json(v));
  for (std::size_t i = s.slice_dim(); i < s.frame().dim(); ++i) comp.push_back(coeff_json(s.frame().basis[i]));
  for (const auto& v : s.b_minus()) sb.push_back(coeff_json(v));
  return {{"name", s.name()},
          {"algebra", algebra_to_json(s.algebra())},
          {"triple", {{"e", coeff_json(s.triple().e)}, {"h", coeff_json(s.triple().h)}, {"f", coeff_json(s.triple().f)}}},
          {"grading", s.grading().deg},
          {"isotropic", iso},
          {"a", coeff_json(s.a())},
          {"slice_basis", slice},
          {"complement_basis", comp},
          {"s_basis", sb}};
}

std::vector<Method> parse_methods(const std::string& text) {
  if (text == "all") return {Method::Tensor, Method::Dirac, Method::DS};
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string m = text.substr(start, end - start);
    if (m == "tensor") out.push_back(Method::Tensor);
    else if (m == "dirac") out.push_back(Method::Dirac);
    else if (m == "ds") out.push_back(Method::DS);
    else fail(ErrorCode::InvalidArgument, "unknown method '" + m + "' (expected tensor, dirac, ds or all)");
    start = end + 1;
  }
  return out;
}

ReductionOutput run_reduction(const GradedSetup& s, const std::vector<Method>& methods) {
  if (methods.empty()) fail(ErrorCode::InvalidArgument, "no reduction method selected");
  ReductionOutput out;
  for (auto m : methods) {
    MatDiffOp r = reduce(s, m);
    out.comparison.runs.push_back({s.name(), method_name(m), {}});
    if (!out.comparison.results.empty() && !(out.comparison.results.front() == r) && out.comparison.all_equal) {
      out.comparison.all_equal = false;
      out.comparison.first_mismatch = method_name(methods.front()) + " and " + method_name(m) + " differ";
    }
    out.comparison.results.push_back(std::move(r));
  }
  out.pencil = out.comparison.results.front();
  return out;
}

std::string render_reduction(const GradedSetup& s, const ReductionOutput& out, const std::string& format) {
  BracketTable p2 = make_table(p2_part(out.pencil), s.name(), "P2");
  BracketTable p1 = make_table(p1_part(out.pencil), s.name(), "P1");
  BracketTable pl = make_table(out.pencil, s.name(), "Plambda");
  std::vector<std::string> names;
  for (const auto& r : out.comparison.runs) names.push_back(r.method);
  if (format == "json") {
    json j = {{"setup", s.name()},
              {"slice_basis", json::array()},
              {"methods", names},
              {"methods_agree", out.comparison.all_equal},
              {"tables", {{"P2", render_table_json(p2)}, {"P1", render_table_json(p1)}, {"Plambda", render_table_json(pl)}}}};
    for (const auto& v : s.slice_basis()) j["slice_basis"].push_back(format_element(s.algebra(), v));
    if (!out.comparison.all_equal) j["first_mismatch"] = out.comparison.first_mismatch;
    return j.dump(2) + "\n";
  }
  if (format != "text") fail(ErrorCode::InvalidArgument, "unknown format '" + format + "' (expected text or json)");
  std::ostringstream os;
  os << "# setup: " << s.name() << "\n# slice basis:";
  for (std::size_t i = 0; i < s.slice_dim(); ++i)
    os << " q" << i + 1 << "=" << format_element(s.algebra(), s.slice_basis()[i]);
  os << "\n# methods:";
  for (const auto& m : names) os << " " << m;
  os << (names.size() > 1 ? (out.comparison.all_equal ? " (agree)" : " (DISAGREE: " + out.comparison.first_mismatch + ")") : "")
     << "\n\n";
  os << render_table_text(p2) << "\n" << render_table_text(p1) << "\n" << render_table_text(pl);
  return os.str();
}

}  // namespace wred
