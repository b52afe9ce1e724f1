#pragma once

#include <stdexcept>
#include <vector>

#include "nsalpha/laurent_matrix.hpp"

namespace nsalpha {

/// Thrown when a size-capped exact computation is asked to exceed its cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SNFResult {
  LaurentMatrix S;                   // r x r, invertible over the Laurent ring
  LaurentMatrix T;                   // s x s, invertible over the Laurent ring
  std::vector<LaurentPoly> factors;  // monic, zero valuation, p_l | p_{l+1}
  int rank = 0;                      // rank over the fraction field
  LaurentPoly det_S;                 // unit c*z^m, tracked during elimination
  LaurentPoly det_T;
};

/// Smith normal form over Q(i)[z, z^-1].  S*A*T = diag(p_1, ..., p_k, 0, ...)
/// is verified by exact multiplication before returning.
SNFResult smith_normal_form(const LaurentMatrix& A);

/// d_l = monic gcd of all l x l minors; independent oracle for the invariant
/// factors via p_l = d_l / d_{l-1}.  Dense minor enumeration; r, s <= 5.
std::vector<LaurentPoly> determinantal_divisors(const LaurentMatrix& A);

/// Monic p_k.  Throws std::invalid_argument for the zero matrix.
LaurentPoly last_invariant_factor(const LaurentMatrix& A);

}  // namespace nsalpha
