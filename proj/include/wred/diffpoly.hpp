#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wred/rational.hpp"

namespace wred {

// The jet variable u^{field,(order)}; fields are 0-based internally.
struct Jet {
  int field = 0;
  int order = 0;
  auto operator<=>(const Jet&) const = default;
};

struct Monomial {
  std::vector<std::pair<Jet, int>> factors;  // sorted by jet, exponents > 0
  int lam = 0;
  int eps = 0;

  int degree() const;  // total degree in jet variables
  bool operator==(const Monomial&) const = default;
};

// Graded by total jet degree, then lexicographic in the factors, then eps, then lam.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial in jet variables with exact coefficients and the central
// parameters lam, eps.
class DiffPoly {
public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT: constants convert implicitly
  DiffPoly(long c) : DiffPoly(Rational(c)) {}  // NOLINT
  DiffPoly(int c) : DiffPoly(Rational(c)) {}  // NOLINT

  static DiffPoly var(int field, int order = 0);
  static DiffPoly lam(int power = 1);
  static DiffPoly eps(int power = 1);
  static DiffPoly monomial(const Rational& c, Monomial m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // no jets, no lam, no eps
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  DiffPoly operator-() const;
  void add_term(const Monomial& m, const Rational& c);

  int max_order() const;  // -1 without jet variables
  int max_field() const;  // -1 without jet variables
  int lam_degree() const;  // -1 for zero
  int eps_degree() const;

  // Coefficient of lam^p (resp. eps^q), itself free of that parameter.
  DiffPoly lam_coeff(int p) const;
  DiffPoly eps_coeff(int q) const;
  DiffPoly subs_lam(const Rational& v) const;
  DiffPoly subs_eps(const Rational& v) const;

  // Value at given jet values, lam and eps.
  Rational evaluate(const std::function<Rational(Jet)>& jet, const Rational& lam, const Rational& eps) const;

  bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

DiffPoly operator+(DiffPoly a, const DiffPoly& b);
DiffPoly operator-(DiffPoly a, const DiffPoly& b);
DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
DiffPoly operator*(const Rational& c, DiffPoly a);

DiffPoly total_derivative(const DiffPoly& p);
DiffPoly total_derivative(const DiffPoly& p, int times);
DiffPoly partial(const DiffPoly& p, Jet j);

// Replaces field i by images[i] (and its jets by derivatives of images[i]).
// Fields beyond images.size() are left alone.
DiffPoly substitute(const DiffPoly& p, const std::vector<DiffPoly>& images);

// Canonical text, e.g. "-1/2*eps^3 + 2*eps*u1_0*u2_1". Fields print 1-based.
std::string to_string(const DiffPoly& p, std::string_view var = "u");
// Accepts the canonical text (any term order, optional spaces); var prefix as rendered.
DiffPoly parse_diffpoly(std::string_view text, std::string_view var = "u");

}  // namespace wred
