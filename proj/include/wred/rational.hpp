#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace wred {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Accepts "p", "-p" or "p/q"; anything else (floats, exponents) is rejected.
Rational parse_rational(std::string_view text);
// num/den in lowest terms (mpq_class(num, den) does not canonicalize).
Rational make_rational(long num, long den);
std::string to_string(const Rational& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

}  // namespace wred
