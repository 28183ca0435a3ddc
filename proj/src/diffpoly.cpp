#include "wred/diffpoly.hpp"

#include <algorithm>
#include <cctype>

#include "wred/error.hpp"

namespace wred {

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.second;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.factors != b.factors) return a.factors < b.factors;
  if (a.eps != b.eps) return a.eps < b.eps;
  return a.lam < b.lam;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.lam = a.lam + b.lam;
  m.eps = a.eps + b.eps;
  m.factors.reserve(a.factors.size() + b.factors.size());
  auto i = a.factors.begin(), j = b.factors.begin();
  while (i != a.factors.end() || j != b.factors.end()) {
    if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
      m.factors.push_back(*i++);
    } else if (i == a.factors.end() || j->first < i->first) {
      m.factors.push_back(*j++);
    } else {
      m.factors.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

}  // namespace

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

DiffPoly DiffPoly::var(int field, int order) {
  Monomial m;
  m.factors.push_back({Jet{field, order}, 1});
  return monomial(1, std::move(m));
}

DiffPoly DiffPoly::lam(int power) {
  Monomial m;
  m.lam = power;
  return monomial(1, std::move(m));
}

DiffPoly DiffPoly::eps(int power) {
  Monomial m;
  m.eps = power;
  return monomial(1, std::move(m));
}

DiffPoly DiffPoly::monomial(const Rational& c, Monomial m) {
  DiffPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational DiffPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

int DiffPoly::max_order() const {
  int r = -1;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors) r = std::max(r, f.first.order);
  return r;
}

int DiffPoly::max_field() const {
  int r = -1;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors) r = std::max(r, f.first.field);
  return r;
}

int DiffPoly::lam_degree() const {
  int r = -1;
  for (const auto& t : terms_) r = std::max(r, t.first.lam);
  return r;
}

int DiffPoly::eps_degree() const {
  int r = -1;
  for (const auto& t : terms_) r = std::max(r, t.first.eps);
  return r;
}

DiffPoly DiffPoly::lam_coeff(int p) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_)
    if (m.lam == p) {
      Monomial k = m;
      k.lam = 0;
      r.terms_.emplace(std::move(k), c);
    }
  return r;
}

DiffPoly DiffPoly::eps_coeff(int q) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_)
    if (m.eps == q) {
      Monomial k = m;
      k.eps = 0;
      r.terms_.emplace(std::move(k), c);
    }
  return r;
}

namespace {

Rational power(const Rational& v, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= v;
  return r;
}

}  // namespace

DiffPoly DiffPoly::subs_lam(const Rational& v) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    k.lam = 0;
    r.add_term(k, c * power(v, m.lam));
  }
  return r;
}

DiffPoly DiffPoly::subs_eps(const Rational& v) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    k.eps = 0;
    r.add_term(k, c * power(v, m.eps));
  }
  return r;
}

Rational DiffPoly::evaluate(const std::function<Rational(Jet)>& jet, const Rational& lam,
                            const Rational& eps) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c * power(lam, m.lam) * power(eps, m.eps);
    for (const auto& [j, e] : m.factors) t *= power(jet(j), e);
    total += t;
  }
  return total;
}

DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(multiply(ma, mb), ca * cb);
  return r;
}

DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }

DiffPoly total_derivative(const DiffPoly& p) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      const auto [jet, e] = m.factors[i];
      Monomial k = m;
      if (e == 1) k.factors.erase(k.factors.begin() + static_cast<long>(i));
      else k.factors[i].second = e - 1;
      Monomial d;
      d.factors.push_back({Jet{jet.field, jet.order + 1}, 1});
      r.add_term(multiply(k, d), c * e);
    }
  }
  return r;
}

DiffPoly total_derivative(const DiffPoly& p, int times) {
  DiffPoly r = p;
  for (int i = 0; i < times && !r.is_zero(); ++i) r = total_derivative(r);
  return r;
}

DiffPoly partial(const DiffPoly& p, Jet j) {
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    auto it = std::find_if(m.factors.begin(), m.factors.end(), [&](const auto& f) { return f.first == j; });
    if (it == m.factors.end()) continue;
    Monomial k = m;
    auto kt = k.factors.begin() + (it - m.factors.begin());
    int e = kt->second;
    if (e == 1) k.factors.erase(kt);
    else kt->second = e - 1;
    r.add_term(k, c * e);
  }
  return r;
}

DiffPoly substitute(const DiffPoly& p, const std::vector<DiffPoly>& images) {
  // derivative cache per field
  std::vector<std::vector<DiffPoly>> jets(images.size());
  auto jet_image = [&](Jet j) -> const DiffPoly& {
    auto& cache = jets[static_cast<std::size_t>(j.field)];
    if (cache.empty()) cache.push_back(images[static_cast<std::size_t>(j.field)]);
    while (static_cast<int>(cache.size()) <= j.order) cache.push_back(total_derivative(cache.back()));
    return cache[static_cast<std::size_t>(j.order)];
  };
  DiffPoly r;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest;
    rest.lam = m.lam;
    rest.eps = m.eps;
    DiffPoly t = DiffPoly::monomial(c, Monomial{});
    for (const auto& [j, e] : m.factors) {
      if (j.field >= 0 && static_cast<std::size_t>(j.field) < images.size()) {
        const DiffPoly& img = jet_image(j);
        for (int k = 0; k < e; ++k) t = t * img;
      } else {
        rest.factors.push_back({j, e});
      }
    }
    r += DiffPoly::monomial(1, rest) * t;
  }
  return r;
}

namespace {

std::string factor_text(const std::string& name, int e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const DiffPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> parts;
    if (m.eps) parts.push_back(factor_text("eps", m.eps));
    if (m.lam) parts.push_back(factor_text("lam", m.lam));
    for (const auto& [j, e] : m.factors)
      parts.push_back(factor_text(std::string(var) + std::to_string(j.field + 1) + "_" + std::to_string(j.order), e));
    Rational a = abs(c);
    std::string body;
    if (parts.empty() || a != 1) body = to_string(a);
    for (const auto& s : parts) body += (body.empty() ? "" : "*") + s;
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::string_view var;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "cannot parse polynomial '" + std::string(s) + "' at offset " + std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  bool starts(std::string_view w) {
    skip();
    return s.substr(pos, w.size()) == w;
  }
  long integer() {
    skip();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) error("expected integer");
    return std::stol(std::string(s.substr(b, pos - b)));
  }
  int exponent() {
    if (peek('^')) {
      ++pos;
      return static_cast<int>(integer());
    }
    return 1;
  }
  DiffPoly factor() {
    skip();
    if (pos >= s.size()) error("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t b = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
      return DiffPoly(parse_rational(s.substr(b, pos - b)));
    }
    if (starts("eps")) {
      pos += 3;
      return DiffPoly::eps(exponent());
    }
    if (starts("lam")) {
      pos += 3;
      return DiffPoly::lam(exponent());
    }
    if (starts(var)) {
      pos += var.size();
      long field = integer();
      if (!peek('_')) error("expected '_'");
      ++pos;
      long order = integer();
      if (field < 1) error("fields are numbered from 1");
      int e = exponent();
      DiffPoly v = DiffPoly::var(static_cast<int>(field - 1), static_cast<int>(order));
      DiffPoly r(1);
      for (int i = 0; i < e; ++i) r = r * v;
      return r;
    }
    error("unexpected character");
  }
  DiffPoly term() {
    DiffPoly t = factor();
    while (peek('*')) {
      ++pos;
      t = t * factor();
    }
    return t;
  }
  DiffPoly parse() {
    DiffPoly total;
    skip();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos;
    } else if (peek('+')) {
      ++pos;
    }
    for (;;) {
      DiffPoly t = term();
      total += neg ? -t : t;
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+') neg = false;
      else if (s[pos] == '-') neg = true;
      else error("expected '+' or '-'");
      ++pos;
    }
    return total;
  }
};

}  // namespace

DiffPoly parse_diffpoly(std::string_view text, std::string_view var) {
  Parser p{text, var};
  p.skip();
  if (p.pos >= text.size()) p.error("empty input");
  return p.parse();
}

}  // namespace wred
