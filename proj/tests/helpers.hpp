#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "nsalpha/baker.hpp"
#include "nsalpha/nets.hpp"

namespace testutil {

using namespace nsalpha;

/// p = sum of terms (exp, re, im) with integer parts.
inline LaurentPoly P(std::vector<std::tuple<long, long, long>> terms) {
  LaurentPoly p;
  for (auto& [e, re, im] : terms) p.set(e, GaussianRational(re, im));
  return p;
}

inline LaurentPoly z_minus_1() { return P({{1, 1, 0}, {0, -1, 0}}); }
inline LaurentPoly counterexample_poly() { return P({{2, 5, 0}, {1, -6, 0}, {0, 5, 0}}); }

inline GaussianRational ce_root() {
  return GaussianRational(Rational(3, 5), Rational(4, 5));
}

/// Deterministic random Laurent polynomial, degree window [lo, hi],
/// integer coefficients in [-3, 3] plus occasional small imaginary parts.
inline LaurentPoly random_poly(std::mt19937& rng, long lo = 0, long hi = 2) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> imag_roll(0, 3);
  LaurentPoly p;
  for (long e = lo; e <= hi; ++e) {
    long re = coeff(rng);
    long im = imag_roll(rng) == 0 ? coeff(rng) : 0;
    if (re || im) p.set(e, GaussianRational(re, im));
  }
  return p;
}

inline LaurentMatrix random_matrix(std::mt19937& rng, int r, int c, long lo = 0,
                                   long hi = 2) {
  LaurentMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = random_poly(rng, lo, hi);
  return m;
}

/// x + t over a given index-2 extension.
inline GroupRingMatrix xt_matrix(const VCGroupSpec& spec) {
  GroupRingMatrix m(spec, 1, 1);
  m.at(0, 0).set({1, 0}, GaussianRational(1L));
  m.at(0, 0).set({0, 1}, GaussianRational(1L));
  return m;
}

inline bool sigma_multisets_match(std::vector<double> a, std::vector<double> b,
                                  double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// Closed-form alpha of z-1 at level i: log(2/i) / log(2 sin(pi/i)).
inline double z_minus_1_alpha(long i) {
  return std::log(2.0 / i) / std::log(2 * std::sin(M_PI / i));
}

}  // namespace testutil
