#pragma once

#include <vector>

#include "nsalpha/precision.hpp"

namespace nsalpha {

/// Roots of the ordinary representative of p (valuation cleared first), via
/// companion-matrix eigenvalues at double precision.  p must be nonconstant
/// modulo units.
std::vector<cdouble> companion_roots(const LaurentPoly& p);

/// Newton polishing at extended precision.  Intended for roots of squarefree
/// polynomials where convergence is quadratic.
BigComplex polish_root(const LaurentPoly& p, BigComplex x, int max_iter = 64);

/// companion_roots followed by polish_root for every root.
std::vector<BigComplex> refined_roots(const LaurentPoly& p);

}  // namespace nsalpha
