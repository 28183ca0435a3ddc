#pragma once

#include <string>
#include <vector>

#include "wred/reduction.hpp"
#include "wred/setup.hpp"
#include "wred/table.hpp"

namespace wred {

// Lie algebra file: {"dim", "basis", "brackets": [[I, J, [[K, "p/q"], ...]], ...], "form"}.
// Indices are 0-based; omitted pairs are zero and [xi_J, xi_I] is filled in by antisymmetry.
AlgebraPtr load_algebra(const json& j);
json algebra_to_json(const LieAlgebra& g);

// Problem description. Keys:
//   builtin "slN" with partition, or algebra (object) with triple
//   grading: "dynkin" | "G1" | "G2" | "G3" (sl3 minimal) | [degrees] | [[n x n table]]
//   isotropic, a, slice_basis, complement_basis, s_basis: elements as expressions
//   ("e21+e32", "f") or coefficient arrays; name
SetupPtr resolve_setup(const json& problem);

// Setup file contents for a resolved setup (algebra inlined, elements as coefficient arrays).
json setup_to_json(const GradedSetup& s);

// Degree tables of the three good gradings of sl3 for f = e31.
std::vector<std::vector<int>> sl3_minimal_grading(const std::string& name);

// tensor, dirac, ds, all, or a comma separated list
std::vector<Method> parse_methods(const std::string& text);

struct ReductionOutput {
  MatDiffOp pencil;
  ComparisonReport comparison;  // filled when several methods ran
};

ReductionOutput run_reduction(const GradedSetup& s, const std::vector<Method>& methods);

// Text or JSON document with the P2, P1 and combined tables (and the method comparison).
std::string render_reduction(const GradedSetup& s, const ReductionOutput& out, const std::string& format);

}  // namespace wred
