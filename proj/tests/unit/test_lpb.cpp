#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wred/error.hpp"
#include "wred/problem.hpp"
#include "wred/verify.hpp"

using namespace wred;

namespace {

SetupPtr kdv() { return resolve_setup(json::parse(R"({"builtin": "sl2", "partition": [2], "a": "f"})")); }

MatDiffOp kdv_p2() {
  // -1/2 eps^3 D^3 + 2 eps q D + eps q'
  MatDiffOp p(1, 1);
  p(0, 0) = LinDiffOp({DiffPoly::eps() * DiffPoly::var(0, 1), DiffPoly(2) * DiffPoly::eps() * DiffPoly::var(0), DiffPoly(),
                       DiffPoly(Rational(-1, 2)) * DiffPoly::eps(3)});
  return p;
}

}  // namespace

TEST_CASE("Lie-Poisson pencil is skew and lambda-linear") {
  auto s = kdv();
  MatDiffOp full = lie_poisson_pencil(*s);
  CHECK(is_skew(p1_part(full)));
  CHECK(is_skew(p2_part(full)));
  CHECK(full.lam_degree() == 1);
  auto f = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "grading": "G1", "isotropic": ["e21+e32"], "a": "e21+e32"})"));
  MatDiffOp pf = lie_poisson_pencil(*f);
  CHECK(is_skew(p2_part(pf)));
  CHECK(is_skew(p1_part(pf)));
}

TEST_CASE("Jacobi holds for the full Lie-Poisson pencil of sl2") {
  auto s = kdv();
  MatDiffOp full = lie_poisson_pencil(*s);
  auto family = monomial_family(3, 2);
  CHECK(family.size() > 3);
  CHECK(jacobi_failure(p2_part(full), family).empty());
  CHECK(jacobi_failure(at_lambda(full, Rational(3, 2)), family).empty());
}

TEST_CASE("KdV brackets satisfy Jacobi and a corrupted operator does not") {
  auto family = monomial_family(1, 5);
  MatDiffOp p = kdv_p2();
  CHECK(is_skew(p));
  CHECK(jacobi_failure(p, family).empty());
  // q P q is skew but not Poisson
  MatDiffOp q(1, 1);
  q(0, 0) = LinDiffOp(DiffPoly::var(0));
  MatDiffOp bad = compose(q, compose(p, q));
  CHECK(is_skew(bad));
  CHECK_FALSE(jacobi_failure(bad, family).empty());
  MatDiffOp unskew = p;
  unskew(0, 0).add(0, DiffPoly::var(0));
  CHECK_FALSE(is_skew(unskew));
}

TEST_CASE("bracket of functionals is antisymmetric") {
  MatDiffOp p = kdv_p2();
  LocalFunctional f{DiffPoly::var(0) * DiffPoly::var(0)}, g{DiffPoly::var(0) * DiffPoly::var(0) * DiffPoly::var(0)};
  CHECK(functional_equal(bracket(f, g, p), LocalFunctional{-bracket(g, f, p).density}));
  CHECK(functional_is_zero(jacobi_defect(p, f, g, LocalFunctional{DiffPoly::var(0, 1) * DiffPoly::var(0, 1)})));
}

TEST_CASE("monomial family is independent modulo total derivatives") {
  CHECK(monomial_family(1, 3).size() == 3);  // q, q^2, q^3
  auto fam = monomial_family(2, 3);
  for (std::size_t i = 0; i < fam.size(); ++i) CHECK_FALSE(functional_is_zero(fam[i]));
}

TEST_CASE("Casimir set check") {
  auto s = kdv();
  CHECK(casimir_set_check(*s).ok());
  auto f = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "grading": "G1", "isotropic": ["e21+e32"], "a": "e21+e32"})"));
  auto rep = casimir_set_check(*f);
  CHECK(rep.ok());
  CHECK(rep.items.size() == f->n_minus().size());
}

TEST_CASE("table text and JSON round trip") {
  auto s = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "a": "e31"})"));
  MatDiffOp pen = tensor_procedure(*s);
  for (const char* st : {"P2", "P1", "Plambda"}) {
    MatDiffOp op = std::string(st) == "P2" ? p2_part(pen) : std::string(st) == "P1" ? p1_part(pen) : pen;
    BracketTable t = make_table(op, "x", st);
    BracketTable back = parse_table_text(render_table_text(t));
    CHECK_FALSE(first_table_difference(t, back));
    CHECK(back.entries == t.entries);
    BracketTable jb = parse_table_json(render_table_json(t));
    CHECK(jb.entries == t.entries);
  }
}

TEST_CASE("table difference reports the first differing entry") {
  BracketTable a = make_table(kdv_p2(), "kdv", "P2");
  BracketTable b = a;
  CHECK_FALSE(first_table_difference(a, b));
  b.entries.begin()->second.add(0, DiffPoly::var(0));
  auto d = first_table_difference(a, b);
  REQUIRE(d);
  CHECK(d->find("{q1(x), q1(y)}") != std::string::npos);
  BracketTable c = a;
  c.entries.clear();
  CHECK(first_table_difference(a, c));
  CHECK_THROWS_AS(parse_table_text("{q1(x), q1(y)} = (1)*delta^(x-y)\n"), Error);
}

TEST_CASE("table rendering omits zero pairs and lists i <= j") {
  auto s = resolve_setup(json::parse(R"({"builtin": "sl3", "partition": [2, 1], "a": "e31"})"));
  BracketTable t = make_table(p2_part(tensor_procedure(*s)), "fkdv", "P2");
  CHECK(t.entries.size() == 7);
  for (const auto& [ij, op] : t.entries) {
    CHECK(ij.first <= ij.second);
    CHECK_FALSE(op.is_zero());
  }
}
