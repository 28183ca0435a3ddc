#pragma once

#include <string>
#include <vector>

#include "wred/diffop.hpp"
#include "wred/pencil.hpp"
#include "wred/setup.hpp"

namespace wred {

// Reduced pencils are m x m operators in the slice coordinates q^1..q^m,
// polynomial in lam and eps, stored as eps times the bracket.

MatDiffOp tensor_procedure(const GradedSetup& s);

int default_order_cap(std::size_t dim_g);  // 2 dim g unless W_REDUCE_ORDER_CAP is set

// Two-sided inverse of a square operator whose eps^0 part is an invertible
// multiplication operator. Throws NoFiniteOrderInverse otherwise or when more
// than cap eps-orders are needed.
MatDiffOp invert_minor(const MatDiffOp& a, int cap);

struct DiracResult {
  MatDiffOp reduced;
  MatDiffOp inverse;  // S on the constraint block
};

// F~ = F_ij - F_ib S F_bj over the given split of a square operator.
DiracResult dirac_reduce(const MatDiffOp& pencil, const std::vector<std::size_t>& keep,
                         const std::vector<std::size_t>& constraints, int cap);
// The pencil on Q in the setup frame, split into slice and complement indices.
DiracResult dirac_reduce(const GradedSetup& s);

struct GaugeFixMap {
  std::size_t s_dim = 0;
  std::vector<DiffPoly> q;  // q^i in the s fields
  std::vector<DiffPoly> m;  // gauge parameter coordinates in the algebra basis
};

GaugeFixMap ds_gauge_fix(const GradedSetup& s);

// The pencil on S = e + L(b_-) in the s coordinates of the setup's b_- basis,
// made consistent for the coisotropic directions outside l.
MatDiffOp restrict_to_S(const GradedSetup& s);

// D = DQ o Fs o DQ*, then evaluated on the section s^a = q^a (a < m), other s^a = 0.
MatDiffOp leibnitz_transform(const GaugeFixMap& map, const MatDiffOp& fs, std::size_t m);

MatDiffOp ds_reduce(const GradedSetup& s);

// eps^0 D^0 coefficient matrix.
std::vector<std::vector<DiffPoly>> leading_term(const MatDiffOp& r);

enum class Method { Tensor, Dirac, DS };
std::string method_name(Method m);
MatDiffOp reduce(const GradedSetup& s, Method m);

struct ComparisonReport {
  struct Run {
    std::string setup;
    std::string method;
    std::string error;  // empty on success
  };
  std::vector<Run> runs;
  std::vector<MatDiffOp> results;  // parallel to runs (empty operator on error)
  bool all_equal = true;
  std::string first_mismatch;
};

ComparisonReport compare_methods(const std::vector<SetupPtr>& setups, const std::vector<Method>& methods);

}  // namespace wred
