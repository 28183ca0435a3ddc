#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wred/problem.hpp"

namespace wred {

// Monomial densities in nfields fields with sum over factors of (1 + order) <= max_weight,
// one representative per class modulo total derivatives and constants.
std::vector<LocalFunctional> monomial_family(int nfields, int max_weight);

// Jacobi identity on all triples of distinct members of the family.
// Returns an empty string on success, otherwise the first failing triple.
std::string jacobi_failure(const MatDiffOp& p, const std::vector<LocalFunctional>& family);

// Dirac reduction of the finite Lie-Poisson matrix -<[xi^I, xi^J]|z> at the slice
// point z = e + sum_i q_i xi_i (exact rationals).
std::vector<std::vector<Rational>> finite_slice_dirac(const GradedSetup& s, const Vec& q);

struct VerifyOptions {
  std::vector<std::string> gradings;  // named gradings to compare (independence check)
  std::vector<Rational> lambdas{Rational(-1), Rational(1, 2), Rational(3)};
  int jacobi_weight = 3;
  bool jacobi = true;
  std::optional<BracketTable> golden;
  unsigned seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::string setup;
  std::vector<CheckResult> checks;
  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

VerifyReport verify_problem(const json& problem, const VerifyOptions& opt);

}  // namespace wred
