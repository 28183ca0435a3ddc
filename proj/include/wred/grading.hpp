#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wred/liealg.hpp"

namespace wred {

// Z-grading of g in which every basis vector is homogeneous.
struct Grading {
  std::vector<int> deg;

  int min_degree() const;
  int max_degree() const;
  std::vector<std::size_t> piece(int j) const;  // basis indices of g_j
  // Degree of x if x is homogeneous and nonzero.
  std::optional<int> degree_of(const Vec& x) const;
  // Degree-j component of x.
  Vec component(const Vec& x, int j) const;
};

// deg(xi_I) = eigenvalue of ad h; requires ad h diagonal on the basis with integer entries.
Grading dynkin_grading(const LieAlgebra& g, const Vec& h);

// For build_sl_n: degrees of the matrix units e_ij given as an n x n table
// (diagonal entries must be zero, h_i get degree 0).
Grading grading_from_matrix(const LieAlgebra& g, int n, const std::vector<std::vector<int>>& table);

struct GoodGradingReport {
  struct Level {
    int j = 0;
    std::size_t dim = 0;      // dim g_j
    std::size_t target = 0;   // dim g_{j-2}
    std::size_t rank = 0;     // rank of ad f : g_j -> g_{j-2}
    bool injective_required = false;
    bool surjective_required = false;
    bool ok = true;
  };
  std::vector<Level> levels;
  bool respects_bracket = true;
  bool f_in_minus2 = true;
  bool h_in_0 = true;
  bool e_in_2 = true;
  std::string first_failure;
  bool ok() const;
};

GoodGradingReport verify_good_grading(const LieAlgebra& g, const SL2Triple& t, const Grading& gr);

}  // namespace wred
