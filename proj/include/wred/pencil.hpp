#pragma once

#include <string>
#include <vector>

#include "wred/diffop.hpp"
#include "wred/functional.hpp"
#include "wred/setup.hpp"

namespace wred {

// Affine chart z = base + sum_a u^a directions[a] with jet fields u^a.
struct PointChart {
  Vec base;
  std::vector<Vec> directions;
};

// Operator block F(x_I, y_J) = eps <x_I|y_J> D - <[x_I,y_J]|z> - lam <[x_I,y_J]|a>
// for covector representatives x_I, y_J. This is eps times the bracket of the
// linear functions <z|x_I>, <z|y_J> under P_2 + lam P_1.
MatDiffOp pencil_block(const LieAlgebra& g, const std::vector<Vec>& rows, const std::vector<Vec>& cols,
                       const PointChart& z, const Vec& a);

enum class PencilDomain { Full, Slice };

// The pencil in frame coordinates q^I = <z - e|xi^I>. Full: all dim g fields.
// Slice: evaluated on Q, fields q^1..q^m only, still a dim g x dim g matrix.
MatDiffOp lie_poisson_pencil(const GradedSetup& s, PencilDomain domain = PencilDomain::Full);
MatDiffOp frame_pencil(const LieAlgebra& g, const Frame& fr, const Vec& e, const Vec& a, PencilDomain domain);

inline MatDiffOp p1_part(const MatDiffOp& pencil) { return lam_part(pencil, 1); }
inline MatDiffOp p2_part(const MatDiffOp& pencil) { return lam_part(pencil, 0); }
MatDiffOp at_lambda(const MatDiffOp& pencil, const Rational& lam);

// {F, G} density sum_I dF/dq^I (P dG/dq)^I, with the implicit 1/eps dropped.
LocalFunctional bracket(const LocalFunctional& f, const LocalFunctional& g, const MatDiffOp& p);

// {{F,G},H} + {{G,H},F} + {{H,F},G}.
LocalFunctional jacobi_defect(const MatDiffOp& p, const LocalFunctional& f, const LocalFunctional& g,
                              const LocalFunctional& h);

// Precomputed variant for many triples: gradients, P applied to them, and the
// gradients of pairwise brackets (computed on first use; not thread-safe).
class JacobiEvaluator {
public:
  JacobiEvaluator(MatDiffOp p, const std::vector<LocalFunctional>& family);
  bool vanishes(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t size() const { return grads_.size(); }

private:
  const std::vector<DiffPoly>& pair_gradient(std::size_t i, std::size_t j) const;
  MatDiffOp p_;
  std::vector<std::vector<DiffPoly>> grads_, pgrads_;
  mutable std::vector<std::vector<DiffPoly>> pair_cache_;
  mutable std::vector<bool> cached_;
};

bool is_skew(const MatDiffOp& p);

struct CasimirReport {
  struct Item {
    std::string element;
    bool p1_casimir = true;
  };
  std::vector<Item> items;        // one per n_- basis vector
  bool closed_under_p2 = true;    // gradients of {F_b, F_c}_2 lie in n_-
  std::string first_failure;
  bool ok() const;
};

CasimirReport casimir_set_check(const GradedSetup& s);

// Whether F_b(q) = (b|q) is a Casimir of P_1 (i.e. [a, b] = 0 seen through the operator).
bool is_p1_casimir(const GradedSetup& s, const MatDiffOp& full_pencil, const Vec& b);

}  // namespace wred
