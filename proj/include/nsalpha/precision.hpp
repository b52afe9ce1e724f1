#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "nsalpha/laurent.hpp"

namespace nsalpha {

// Extended-precision scalar/complex pair used whenever hardware doubles lose
// the small singular values to cancellation.  40 decimal digits ~ 133 bits.
using BigFloat = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

inline int big_float_bits() { return std::numeric_limits<BigFloat>::digits; }

inline double to_double(const BigFloat& x) { return x.convert_to<double>(); }

inline BigFloat big_pi() { return boost::math::constants::pi<BigFloat>(); }

/// e^{2 pi i k / n} at extended precision.
BigComplex unit_root_big(long n, long k);

BigComplex to_big(cdouble z);
cdouble to_cdouble(const BigComplex& z);

BigComplex eval_big(const LaurentPoly& p, const BigComplex& zval);

/// |c| * prod |z - a_r|^{mu_r}: evaluation through a precomputed factorization,
/// immune to the catastrophic cancellation of the expanded form near roots.
BigFloat eval_factored_abs(const BigFloat& lead_abs,
                           const std::vector<std::pair<BigComplex, int>>& roots,
                           const BigComplex& zval);

}  // namespace nsalpha
