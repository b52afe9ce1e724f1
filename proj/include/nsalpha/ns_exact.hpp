#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nsalpha/groupring.hpp"
#include "nsalpha/precision.hpp"
#include "nsalpha/smith.hpp"

namespace nsalpha {

/// Thrown when a numeric decision cannot be certified after precision
/// escalation (e.g. a root sits in the ambiguity band around the unit circle).
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnitCircleRoot {
  BigComplex approx;          // polished root, |approx| = 1 up to tolerance
  int multiplicity = 0;       // multiplicity in the input polynomial
  std::optional<long> order;  // minimal m with root^m = 1, if a root of unity
  cdouble approx_d() const { return to_cdouble(approx); }
  /// Angle in [0, 1): approx = exp(2*pi*i*angle).
  BigFloat angle() const;
};

/// Unit-circle roots of p with multiplicities, via squarefree decomposition
/// and companion-matrix roots polished at extended precision.  Root-of-unity
/// orders are certified exactly through gcds with z^m - 1 for m up to
/// 2*deg(p)^2.  Roots within (tol_circle, 10*tol_circle] of the circle raise
/// PrecisionError; farther roots are discarded.
std::vector<UnitCircleRoot> unit_circle_roots(const LaurentPoly& p,
                                              double tol_circle = 1e-10);

/// alpha^(2) value: finite 1/mu0, or the spectral-gap symbol infinity-plus.
/// Ordering: every finite value < infinity_plus.
struct NSValue {
  bool infinity_plus = false;
  long mu0 = 0;  // max unit-circle multiplicity when finite

  static NSValue finite(long mu) { return {false, mu}; }
  static NSValue inf_plus() { return {true, 0}; }

  bool is_finite() const { return !infinity_plus; }
  double value() const;  // 1/mu0; +inf for infinity_plus
  bool operator==(const NSValue& o) const {
    return infinity_plus == o.infinity_plus && mu0 == o.mu0;
  }
  std::string str() const;
  nlohmann::json to_json() const;
};

/// alpha^(2) of a single Laurent polynomial: 1 / max multiplicity among
/// unit-circle roots; infinity-plus when there are none or p = 0.
NSValue ns_number(const LaurentPoly& p, double tol_circle = 1e-10);

/// alpha^(2) of a Laurent matrix via the last invariant factor p_k of its
/// Smith normal form; infinity-plus for the zero matrix.
NSValue ns_number_matrix(const LaurentMatrix& A, double tol_circle = 1e-10);

/// alpha^(2) over a virtually cyclic group via restriction to Z.
NSValue ns_number_group(const GroupRingMatrix& A, double tol_circle = 1e-10);

}  // namespace nsalpha
