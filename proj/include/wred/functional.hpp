#pragma once

#include <vector>

#include "wred/diffpoly.hpp"

namespace wred {

// Integral of a density over the circle; equal up to total derivatives and constants.
struct LocalFunctional {
  DiffPoly density;
};

// Euler operator E_i f = sum_k (-D)^k df/du^{i,(k)}.
DiffPoly variational_derivative(const LocalFunctional& f, int field);
std::vector<DiffPoly> gradient(const LocalFunctional& f, int nfields);

// True iff every Euler derivative of the difference vanishes.
bool functional_equal(const LocalFunctional& a, const LocalFunctional& b);
bool functional_is_zero(const LocalFunctional& a);

}  // namespace wred
