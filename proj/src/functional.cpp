#include "wred/functional.hpp"

#include <algorithm>

namespace wred {

DiffPoly variational_derivative(const LocalFunctional& f, int field) {
  DiffPoly r;
  for (int k = f.density.max_order(); k >= 0; --k) {
    // Horner: r = d/du^{(k)} f - D r
    r = partial(f.density, Jet{field, k}) - total_derivative(r);
  }
  return r;
}

std::vector<DiffPoly> gradient(const LocalFunctional& f, int nfields) {
  std::vector<DiffPoly> g;
  for (int i = 0; i < nfields; ++i) g.push_back(variational_derivative(f, i));
  return g;
}

bool functional_is_zero(const LocalFunctional& a) {
  for (int i = 0; i <= a.density.max_field(); ++i)
    if (!variational_derivative(a, i).is_zero()) return false;
  return true;
}

bool functional_equal(const LocalFunctional& a, const LocalFunctional& b) {
  return functional_is_zero(LocalFunctional{a.density - b.density});
}

}  // namespace wred
