#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wred/linalg.hpp"
#include "wred/rational.hpp"

namespace wred {

// Finite-dimensional Lie algebra given by exact structure constants in a fixed
// basis xi_0..xi_{n-1} together with an invariant symmetric bilinear form.
class LieAlgebra {
public:
  // structure[I][J] holds the coordinates of [xi_I, xi_J].
  LieAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> structure, Matrix form);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad x: column j is [x, xi_j].
  Matrix ad(const Vec& x) const;

  const Matrix& form_matrix() const { return form_; }
  Rational form(const Vec& x, const Vec& y) const;

  // Nonzero structure constants as (I, J, K, c), I < J.
  struct Entry {
    std::size_t i, j, k;
    Rational c;
  };
  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> structure_;
  Matrix form_;
  std::vector<Entry> entries_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct AlgebraCheck {
  bool antisymmetric = true;
  bool jacobi = true;
  bool invariant = true;
  bool nondegenerate = true;
  std::string first_failure;
  bool ok() const { return antisymmetric && jacobi && invariant && nondegenerate; }
};

// Exhaustive check over all basis triples.
AlgebraCheck check_algebra(const LieAlgebra& g);

// Traceless n x n matrices: e_ij (i != j, row-major) followed by h_i = e_ii - e_{i+1,i+1};
// form is the trace form.
LieAlgebra build_sl_n(int n);

// Element of sl_n as an n x n matrix, and back. Only valid for build_sl_n algebras.
std::vector<Vec> sl_n_to_matrix(int n, const Vec& x);
Vec sl_n_from_matrix(int n, const std::vector<Vec>& m);

// Linear combination of basis labels, e.g. "e21+e32", "h1-h2", "3/2*e13", "-e31".
Vec parse_element(const LieAlgebra& g, std::string_view expr);
std::string format_element(const LieAlgebra& g, const Vec& x);

struct SL2Triple {
  Vec e, h, f;
};

// Empty when the triple satisfies [h,e]=2e, [h,f]=-2f, [e,f]=h with e, f nilpotent;
// otherwise the first violated relation.
std::optional<std::string> check_triple(const LieAlgebra& g, const SL2Triple& t);

// Jordan-block triple for sl_n: basis vectors ordered by weight (descending), f lowers
// within each block with unit coefficients.
SL2Triple sl2_from_partition(const LieAlgebra& g, int n, const std::vector<int>& partition);

bool is_nilpotent(const LieAlgebra& g, const Vec& x);

}  // namespace wred
