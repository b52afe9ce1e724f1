#include "nsalpha/baker.hpp"

#include <cmath>

#include <mpfr.h>

namespace nsalpha {

namespace {

/// Decide lhs >= n^{-2D}/4 with lhs an exact rational, by bracketing both
/// sides with directed rounding and escalating precision on ties.
bool rational_geq_power_bound(const Rational& lhs, long n, double D) {
  for (mpfr_prec_t prec = 128; prec <= 8192; prec *= 2) {
    mpfr_t l_lo, l_hi, r_lo, r_hi, base, expo;
    mpfr_inits2(prec, l_lo, l_hi, r_lo, r_hi, base, expo, (mpfr_ptr)nullptr);
    mpfr_set_q(l_lo, lhs.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(l_hi, lhs.get_mpq_t(), MPFR_RNDU);
    mpfr_set_si(base, n, MPFR_RNDN);  // exact for long
    mpfr_set_d(expo, -2 * D, MPFR_RNDN);  // exact for double
    mpfr_pow(r_lo, base, expo, MPFR_RNDD);
    mpfr_div_ui(r_lo, r_lo, 4, MPFR_RNDD);
    mpfr_pow(r_hi, base, expo, MPFR_RNDU);
    mpfr_div_ui(r_hi, r_hi, 4, MPFR_RNDU);
    int ge = mpfr_cmp(l_lo, r_hi);
    int lt = mpfr_cmp(l_hi, r_lo);
    mpfr_clears(l_lo, l_hi, r_lo, r_hi, base, expo, (mpfr_ptr)nullptr);
    if (ge >= 0) return true;
    if (lt < 0) return false;
  }
  throw PrecisionError("circle_runner_check: comparison unresolved at 8192 bits");
}

}  // namespace

std::vector<CircleRunnerRow> circle_runner_check(const GaussianRational& a, double D,
                                                 const std::vector<long>& n_set) {
  if (a.norm_sq() != 1)
    throw std::invalid_argument("circle_runner_check: |a| must be exactly 1");
  if (D < 1) throw std::invalid_argument("circle_runner_check: D must be >= 1");
  std::vector<CircleRunnerRow> out;
  out.reserve(n_set.size());
  for (long n : n_set) {
    if (n <= 0) throw std::invalid_argument("circle_runner_check: n must be positive");
    // a^n exactly by binary powering.
    GaussianRational w(1L);
    GaussianRational base = a;
    long e = n;
    while (e > 0) {
      if (e & 1) w *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    CircleRunnerRow row;
    row.n = n;
    if (w == GaussianRational(1L)) {
      row.skipped = true;
    } else {
      Rational dist_sq = (w - GaussianRational(1L)).norm_sq();
      row.ok = rational_geq_power_bound(dist_sq, n, D);
    }
    out.push_back(row);
  }
  return out;
}

double empirical_baker_exponent(const GaussianRational& a, long n_max) {
  RecordSearchResult rs = best_approx_records(a, 1, n_max);
  if (rs.root_of_unity)
    throw std::invalid_argument("empirical_baker_exponent: a is a root of unity");
  double best = 0;
  for (const auto& r : rs.records) {
    if (r.n < 2) continue;
    // |a^n - 1| = n^{-D_n}/2  =>  D_n = -log(2 |a^n - 1|) / log n.
    double d = -std::log(2 * r.float_distance) / std::log(static_cast<double>(r.n));
    best = std::max(best, d);
  }
  return best;
}

double liminf_floor(const NSValue& ns, double D) {
  if (!ns.is_finite())
    throw std::invalid_argument("liminf_floor: finite alpha^(2) required");
  if (D < 1) throw std::invalid_argument("liminf_floor: D must be >= 1");
  return ns.value() / (1 + D);
}

}  // namespace nsalpha
