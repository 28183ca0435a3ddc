#include "wred/rational.hpp"

#include <cctype>

#include "wred/error.hpp"

namespace wred {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false)))
    fail(ErrorCode::Parse, "not an exact rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Rational r;
  r.get_num() = mpz_class(n, 10);
  r.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (r.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace wred
