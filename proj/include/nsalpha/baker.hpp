#pragma once

#include <vector>

#include "nsalpha/nets.hpp"

namespace nsalpha {

struct CircleRunnerRow {
  long n = 0;
  bool skipped = false;  // a^n = 1: the bound does not apply
  bool ok = false;       // |a^n - 1| >= n^{-D} / 2
};

/// Checks the lower bound |a^n - 1| >= n^{-D}/2 for each n in n_set, with the
/// left side exact and the right side bracketed by directed rounding
/// (escalating precision until the comparison is unambiguous).
std::vector<CircleRunnerRow> circle_runner_check(const GaussianRational& a, double D,
                                                 const std::vector<long>& n_set);

/// Smallest empirical exponent: max over record exponents n >= 2 of
/// -log(2 |a^n - 1|) / log n.  Any valid D must be at least this large.
double empirical_baker_exponent(const GaussianRational& a, long n_max);

/// alpha^(2) / (1 + D): the quantitative floor under every alpha sample.
/// Requires a finite NSValue and D >= 1.
double liminf_floor(const NSValue& ns, double D);

}  // namespace nsalpha
