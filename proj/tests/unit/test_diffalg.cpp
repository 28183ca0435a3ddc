#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wred/diffop.hpp"
#include "wred/error.hpp"
#include "wred/functional.hpp"

using namespace wred;

namespace {

struct Gen {
  std::mt19937 rng{2024};
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  DiffPoly poly(int nfields = 2, int terms = 3, int max_order = 2) {
    DiffPoly p;
    for (int t = 0; t < terms; ++t) {
      DiffPoly m(make_rational(uniform(-5, 5), uniform(1, 3)));
      int deg = uniform(0, 2);
      for (int d = 0; d < deg; ++d) m = m * DiffPoly::var(uniform(0, nfields - 1), uniform(0, max_order));
      if (uniform(0, 3) == 0) m = m * DiffPoly::eps();
      p += m;
    }
    return p;
  }

  LinDiffOp op(int order = 2) {
    std::vector<DiffPoly> c;
    for (int k = 0; k <= order; ++k) c.push_back(poly(2, 2, 1));
    return LinDiffOp(c);
  }
};

}  // namespace

TEST_CASE("rational parsing is exact and rejects floats") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("canonical rendering round trips") {
  Gen g;
  for (int t = 0; t < 30; ++t) {
    DiffPoly p = g.poly(3, 4) + DiffPoly::lam() * g.poly();
    CHECK(parse_diffpoly(to_string(p, "q"), "q") == p);
  }
  CHECK(to_string(DiffPoly(), "q") == "0");
  CHECK(parse_diffpoly("q1_0*q1_0 - 2*q2_1", "q") == DiffPoly::var(0) * DiffPoly::var(0) - DiffPoly(2) * DiffPoly::var(1, 1));
  CHECK_THROWS_AS(parse_diffpoly("q1_0 +* q2_0", "q"), Error);
}

TEST_CASE("total derivative is a derivation") {
  Gen g;
  for (int t = 0; t < 30; ++t) {
    DiffPoly a = g.poly(), b = g.poly();
    CHECK(total_derivative(a * b) == total_derivative(a) * b + a * total_derivative(b));
    CHECK(total_derivative(a + b) == total_derivative(a) + total_derivative(b));
  }
  CHECK(total_derivative(DiffPoly::var(0, 2)) == DiffPoly::var(0, 3));
  CHECK(total_derivative(DiffPoly::eps() + DiffPoly::lam()).is_zero());
}

TEST_CASE("Euler operator kills total derivatives") {
  Gen g;
  for (int t = 0; t < 30; ++t) {
    LocalFunctional f{total_derivative(g.poly(2, 3, 2))};
    CHECK(functional_is_zero(f));
  }
  LocalFunctional h{DiffPoly::var(0) * DiffPoly::var(0) * DiffPoly::var(0)};
  CHECK(variational_derivative(h, 0) == DiffPoly(3) * DiffPoly::var(0) * DiffPoly::var(0));
  LocalFunctional k{DiffPoly::var(0, 1) * DiffPoly::var(0, 1)};
  CHECK(variational_derivative(k, 0) == DiffPoly(-2) * DiffPoly::var(0, 2));
  CHECK(functional_equal(LocalFunctional{DiffPoly::var(0) * DiffPoly::var(0, 2)}, LocalFunctional{-DiffPoly::var(0, 1) * DiffPoly::var(0, 1)}));
}

TEST_CASE("operator algebra identities") {
  Gen g;
  for (int t = 0; t < 15; ++t) {
    LinDiffOp a = g.op(), b = g.op(1), c = g.op(2);
    DiffPoly v = g.poly();
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(wred::apply(compose(a, b), v) == wred::apply(a, wred::apply(b, v)));
    CHECK(adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a)));
    CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
  }
  CHECK(adjoint(LinDiffOp::d(1)) == -LinDiffOp::d(1));
  CHECK(adjoint(LinDiffOp::d(3)) == -LinDiffOp::d(3));
  LinDiffOp u(DiffPoly::var(0));
  // D o u = u D + u'
  CHECK(compose(LinDiffOp::d(), u) == LinDiffOp({DiffPoly::var(0, 1), DiffPoly::var(0)}));
  CHECK(LinDiffOp({DiffPoly(1), DiffPoly()}).order() == 0);
  CHECK(LinDiffOp().is_zero());
}

TEST_CASE("adjoint pairing integrates by parts") {
  Gen g;
  for (int t = 0; t < 15; ++t) {
    LinDiffOp a = g.op();
    DiffPoly v = g.poly(), w = g.poly();
    // w A v - v A* w is a total derivative
    CHECK(functional_is_zero(LocalFunctional{w * wred::apply(a, v) - v * wred::apply(adjoint(a), w)}));
  }
}

TEST_CASE("matrix operators") {
  Gen g;
  MatDiffOp a(2, 2), b(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = g.op(1);
      b(i, j) = g.op(1);
    }
  CHECK(compose(a, MatDiffOp::identity(2)) == a);
  CHECK(adjoint(adjoint(a)) == a);
  CHECK(adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a)));
  std::vector<DiffPoly> v{g.poly(), g.poly()};
  CHECK(wred::apply(compose(a, b), v) == wred::apply(a, wred::apply(b, v)));
  MatDiffOp pen = a.map([](const DiffPoly& p) { return p * DiffPoly::lam(); });
  CHECK(lam_part(pen + b, 1) == a);
  CHECK(lam_part(pen + b, 0) == b);
  CHECK_THROWS_AS(compose(MatDiffOp(2, 3), MatDiffOp(2, 2)), Error);
}

TEST_CASE("chain rule for the Frechet derivative") {
  Gen g;
  for (int t = 0; t < 10; ++t) {
    std::vector<DiffPoly> q{g.poly(2, 3, 1), g.poly(2, 3, 1)};
    DiffPoly f = g.poly(2, 3, 1);
    // D(f o q) = (Df at q) o Dq
    MatDiffOp dfq = frechet_derivative({substitute(f, q)}, 2);
    MatDiffOp df = frechet_derivative({f}, 2).map([&](const DiffPoly& p) { return substitute(p, q); });
    CHECK(dfq == compose(df, frechet_derivative(q, 2)));
  }
}

TEST_CASE("substitution commutes with the total derivative") {
  Gen g;
  for (int t = 0; t < 20; ++t) {
    DiffPoly p = g.poly(2, 3, 2);
    std::vector<DiffPoly> images{g.poly(2, 2, 1), g.poly(2, 2, 1)};
    CHECK(substitute(total_derivative(p), images) == total_derivative(substitute(p, images)));
  }
}

TEST_CASE("parameter extraction") {
  DiffPoly p = DiffPoly::lam() * DiffPoly::var(0) + DiffPoly::eps(2) + DiffPoly(3);
  CHECK(p.lam_degree() == 1);
  CHECK(p.eps_degree() == 2);
  CHECK(p.lam_coeff(1) == DiffPoly::var(0));
  CHECK(p.subs_eps(Rational(2)).subs_lam(Rational(0)) == DiffPoly(7));
  CHECK(p.evaluate([](Jet) { return Rational(5); }, 1, 1) == 9);
}
