#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wred/grading.hpp"
#include "wred/liealg.hpp"

namespace wred {

// A basis xi_I of g with its dual xi^I, <xi_I | xi^J> = delta_I^J. The first
// slice_dim vectors span g_f.
struct Frame {
  std::vector<Vec> basis;
  std::vector<Vec> dual;
  std::size_t slice_dim = 0;

  std::size_t dim() const { return basis.size(); }
};

Frame make_frame(const LieAlgebra& g, std::vector<Vec> basis, std::size_t slice_dim);

// Inputs to derive_subspaces. Empty optional bases are derived.
struct SetupInput {
  AlgebraPtr algebra;
  SL2Triple triple;
  Grading grading;
  std::vector<Vec> isotropic;  // spans l inside g_{-1}
  Vec a;
  std::vector<Vec> slice_basis;       // basis of g_f (coordinates q^1..q^m)
  std::vector<Vec> complement_basis;  // basis of [e, g]
  std::vector<Vec> s_basis;           // basis of b_- (slice basis first, then [g_-, e])
  std::string name;
};

class GradedSetup;
using SetupPtr = std::shared_ptr<const GradedSetup>;

// Validated reduction data: sl2-triple, good grading, isotropic subspace, the
// element a, and every derived subspace. Immutable after construction.
class GradedSetup {
public:
  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const SL2Triple& triple() const { return triple_; }
  const Grading& grading() const { return grading_; }
  const Vec& a() const { return a_; }
  const std::string& name() const { return name_; }

  const std::vector<Vec>& ell() const { return ell_; }
  const std::vector<Vec>& ell_prime() const { return ell_prime_; }
  const std::vector<Vec>& n_minus() const { return n_minus_; }
  // Ordered: g_{<=-2} (degree ascending, basis order) then l.
  const std::vector<Vec>& g_minus() const { return g_minus_; }
  const std::vector<Vec>& b_minus() const { return s_basis_; }
  const std::vector<Vec>& slice_basis() const { return slice_; }
  const std::vector<Vec>& ker_ad_e() const { return ker_ad_e_; }
  const Frame& frame() const { return frame_; }
  std::size_t slice_dim() const { return slice_.size(); }
  bool lagrangian() const { return ell_.size() == ell_prime_.size(); }

  friend SetupPtr derive_subspaces(const SetupInput& in);

private:
  GradedSetup() = default;

  AlgebraPtr algebra_;
  SL2Triple triple_;
  Grading grading_;
  Vec a_;
  std::string name_;
  std::vector<Vec> ell_, ell_prime_, n_minus_, g_minus_, s_basis_, slice_, ker_ad_e_;
  Frame frame_;
};

// Validates every invariant (triple, good grading, isotropy, a-condition,
// b_- = [g_-, e] + g_f) and throws wred::Error naming the first violation.
SetupPtr derive_subspaces(const SetupInput& in);

// Basis of g_f determined by the triple alone: ad-h eigenvalue ascending, and
// within an eigenspace the column-reversed echelon basis rescaled so the first
// nonzero coefficient is 1.
std::vector<Vec> default_slice_basis(const LieAlgebra& g, const SL2Triple& t);

// Basis of [e, g] by ad-h eigenvalue ascending.
std::vector<Vec> default_complement_basis(const LieAlgebra& g, const SL2Triple& t);

// Basis of [e, g] homogeneous for the grading: images of ad e on each g_j.
std::vector<Vec> graded_complement_basis(const LieAlgebra& g, const SL2Triple& t, const Grading& gr);

}  // namespace wred
