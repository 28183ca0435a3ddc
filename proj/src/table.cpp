#include "wred/table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "wred/error.hpp"

namespace wred {

json diffpoly_to_json(const DiffPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json factors = json::array();
    for (const auto& [jet, e] : m.factors) factors.push_back({jet.field + 1, jet.order, e});
    terms.push_back({to_string(c), m.lam, m.eps, factors});
  }
  return terms;
}

DiffPoly diffpoly_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::Parse, "polynomial JSON must be an array of terms");
  DiffPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4 || !t[0].is_string() || !t[1].is_number_integer() ||
        !t[2].is_number_integer() || !t[3].is_array())
      fail(ErrorCode::Parse, "polynomial term must be [\"p/q\", lam, eps, factors]");
    Monomial m;
    m.lam = t[1].get<int>();
    m.eps = t[2].get<int>();
    if (m.lam < 0 || m.eps < 0) fail(ErrorCode::Parse, "negative parameter exponent");
    DiffPoly term = DiffPoly::monomial(parse_rational(t[0].get<std::string>()), m);
    for (const auto& f : t[3]) {
      if (!f.is_array() || f.size() != 3) fail(ErrorCode::Parse, "factor must be [field, order, exp]");
      int field = f[0].get<int>(), order = f[1].get<int>(), e = f[2].get<int>();
      if (field < 1 || order < 0 || e < 1) fail(ErrorCode::Parse, "bad factor in polynomial JSON");
      for (int k = 0; k < e; ++k) term = term * DiffPoly::var(field - 1, order);
    }
    p += term;
  }
  return p;
}

BracketTable make_table(const MatDiffOp& op, std::string name, std::string structure) {
  BracketTable t{std::move(name), std::move(structure), op.rows(), {}};
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (std::size_t j = i; j < op.cols(); ++j)
      if (!op(i, j).is_zero()) t.entries[{i, j}] = op(i, j);
  return t;
}

std::string render_entry(std::size_t i, std::size_t j, const LinDiffOp& op) {
  std::string out = "{q" + std::to_string(i + 1) + "(x), q" + std::to_string(j + 1) + "(y)} =";
  bool first = true;
  for (int k = op.order(); k >= 0; --k) {
    if (op.coeff(k).is_zero()) continue;
    out += first ? " " : " + ";
    first = false;
    out += "(" + to_string(op.coeff(k), "q") + ")*delta";
    if (k > 0) out += "^(" + std::to_string(k) + ")";
    out += "(x-y)";
  }
  if (first) out += " 0";
  return out;
}

std::string render_table_text(const BracketTable& t) {
  std::ostringstream os;
  os << "# table: " << t.name << "\n";
  os << "# structure: " << t.structure << "\n";
  os << "# dim: " << t.dim << "\n";
  os << "# {q_i(x), q_j(y)} = (1/eps) * sum_k C_k(x) delta^(k)(x-y); C_k listed, pairs i <= j, zero pairs omitted\n";
  for (const auto& [ij, op] : t.entries) os << render_entry(ij.first, ij.second, op) << "\n";
  return os.str();
}

json render_table_json(const BracketTable& t) {
  json entries = json::array();
  for (const auto& [ij, op] : t.entries) {
    json terms = json::array();
    for (int k = op.order(); k >= 0; --k)
      if (!op.coeff(k).is_zero()) terms.push_back({{"order", k}, {"coeff", diffpoly_to_json(op.coeff(k))}});
    entries.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"terms", terms}});
  }
  return {{"name", t.name}, {"structure", t.structure}, {"dim", t.dim}, {"implicit_factor", "1/eps"},
          {"entries", entries}};
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  fail(ErrorCode::Parse, "bracket table line " + std::to_string(line) + ": " + why);
}

LinDiffOp parse_rhs(const std::string& rhs, std::size_t line) {
  LinDiffOp op;
  if (rhs == "0") return op;
  std::size_t pos = 0;
  while (pos < rhs.size()) {
    while (pos < rhs.size() && (rhs[pos] == ' ' || rhs[pos] == '+')) ++pos;
    if (pos >= rhs.size()) break;
    if (rhs[pos] != '(') bad_line(line, "expected '(' before a coefficient");
    int depth = 0;
    std::size_t end = pos;
    for (; end < rhs.size(); ++end) {
      if (rhs[end] == '(') ++depth;
      if (rhs[end] == ')' && --depth == 0) break;
    }
    if (end >= rhs.size()) bad_line(line, "unbalanced parentheses");
    DiffPoly c = parse_diffpoly(std::string_view(rhs).substr(pos + 1, end - pos - 1), "q");
    pos = end + 1;
    const std::string_view rest = std::string_view(rhs).substr(pos);
    int k = 0;
    if (rest.rfind("*delta(x-y)", 0) == 0) {
      pos += 11;
    } else if (rest.rfind("*delta^(", 0) == 0) {
      std::size_t close = rhs.find(')', pos + 8);
      if (close == std::string::npos) bad_line(line, "bad delta order");
      const std::string digits = rhs.substr(pos + 8, close - pos - 8);
      if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
        bad_line(line, "bad delta order");
      k = std::stoi(digits);
      if (rhs.compare(close + 1, 5, "(x-y)") != 0) bad_line(line, "expected (x-y)");
      pos = close + 6;
    } else {
      bad_line(line, "expected *delta after coefficient");
    }
    op.add(k, c);
  }
  return op;
}

}  // namespace

BracketTable parse_table_text(std::string_view text) {
  BracketTable t;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s[0] == '#') {
      if (s.rfind("# table:", 0) == 0) t.name = trim(s.substr(8));
      else if (s.rfind("# structure:", 0) == 0) t.structure = trim(s.substr(12));
      else if (s.rfind("# dim:", 0) == 0) t.dim = std::stoul(trim(s.substr(6)));
      continue;
    }
    std::size_t i = 0, j = 0;
    char tail[8] = {0};
    if (std::sscanf(s.c_str(), "{q%zu(x), q%zu(y)%1[}]", &i, &j, tail) != 3 || i < 1 || j < 1)
      bad_line(line, "expected '{qi(x), qj(y)} = ...'");
    auto eq = s.find("} =");
    if (eq == std::string::npos) bad_line(line, "missing '='");
    if (i > j) bad_line(line, "pairs must have i <= j");
    if (t.entries.count({i - 1, j - 1})) bad_line(line, "duplicate pair");
    LinDiffOp op = parse_rhs(trim(s.substr(eq + 3)), line);
    if (!op.is_zero()) t.entries[{i - 1, j - 1}] = op;
    t.dim = std::max(t.dim, j);
  }
  return t;
}

BracketTable parse_table_json(const json& j) {
  BracketTable t;
  try {
    t.name = j.value("name", "");
    t.structure = j.value("structure", "");
    t.dim = j.value("dim", std::size_t{0});
    for (const auto& e : j.at("entries")) {
      std::size_t i = e.at("i").get<std::size_t>(), k = e.at("j").get<std::size_t>();
      if (i < 1 || k < i) fail(ErrorCode::Parse, "bracket table JSON: bad pair");
      LinDiffOp op;
      for (const auto& term : e.at("terms")) op.add(term.at("order").get<int>(), diffpoly_from_json(term.at("coeff")));
      if (!op.is_zero()) t.entries[{i - 1, k - 1}] = op;
    }
  } catch (const json::exception& ex) {
    fail(ErrorCode::Parse, std::string("bracket table JSON: ") + ex.what());
  }
  return t;
}

std::optional<std::string> first_table_difference(const BracketTable& expected, const BracketTable& actual) {
  auto a = expected.entries.begin(), b = actual.entries.begin();
  const LinDiffOp zero;
  while (a != expected.entries.end() || b != actual.entries.end()) {
    std::pair<std::size_t, std::size_t> key;
    if (b == actual.entries.end() || (a != expected.entries.end() && a->first < b->first)) key = a->first;
    else key = b->first;
    const LinDiffOp& x = (a != expected.entries.end() && a->first == key) ? a->second : zero;
    const LinDiffOp& y = (b != actual.entries.end() && b->first == key) ? b->second : zero;
    if (!(x == y))
      return "expected " + render_entry(key.first, key.second, x) + "\n     got " + render_entry(key.first, key.second, y);
    if (a != expected.entries.end() && a->first == key) ++a;
    if (b != actual.entries.end() && b->first == key) ++b;
  }
  return std::nullopt;
}

}  // namespace wred
