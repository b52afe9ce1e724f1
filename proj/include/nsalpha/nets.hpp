#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nsalpha/quotients.hpp"

namespace nsalpha {

/// Thrown when an input violates a mathematical hypothesis of the requested
/// computation (e.g. a finite alpha^(2) is required but the spectrum has a
/// gap at zero).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Extrema of a net indexed by positive integers under divisibility, estimated
/// from finitely many samples:
///   liminf = max over K of (inf of samples at multiples of K),
///   limsup = min over K of (sup of samples at multiples of K).
struct NetEstimate {
  struct PerK {
    long K = 0;
    double inf_val = 0, sup_val = 0;
    long inf_witness = 0, sup_witness = 0;  // levels achieving the extrema
    long count = 0;                          // sampled multiples of K
  };
  double liminf_est = 0, limsup_est = 0;
  long liminf_K = 0, limsup_K = 0;  // outer witnesses
  std::vector<PerK> per_k;
  std::vector<long> skipped_K;  // K with no sampled multiple <= i_max
  long budget = 0;              // number of samples consumed

  nlohmann::json to_json() const;
};

/// samples: level -> value.  Levels above i_max are ignored; K values with no
/// sampled multiple are skipped and reported, not errors.
NetEstimate net_extrema(const std::map<long, double>& samples,
                        const std::vector<long>& K_set, long i_max);

/// Best-approximation record: |a^{Kn} - 1| strictly below all earlier values.
struct ApproxRecord {
  long n = 0;
  Rational dist_sq;       // |a^{Kn} - 1|^2, exact
  double float_distance;  // sqrt of the above
};

struct RecordSearchResult {
  std::vector<ApproxRecord> records;
  bool root_of_unity = false;
  long period = 0;  // minimal n with a^{Kn} = 1 when root_of_unity
};

/// Exact iterated powering of a^K in Gaussian rationals.  Requires
/// |a|^2 = 1 exactly and a != 1.
RecordSearchResult best_approx_records(const GaussianRational& a, long K, long n_max);

/// Scaled distance of the non-root-of-unity roots to the (Ki)-th roots of
/// unity, scanned over multiples of K in [i_lo, i_hi].  Returns one index per
/// logarithmic bin (the bin's best separation) and the separation R
/// guaranteed by the whole returned family (its minimum).  When every root is
/// a root of unity the search is trivial: a log-spaced index family with a
/// default R.
struct SeparatedResult {
  double R = 0;
  std::vector<std::pair<long, double>> indices;  // (level, separation)
  bool trivial = false;                          // all roots are roots of unity
};
SeparatedResult separated_index_search(const std::vector<UnitCircleRoot>& roots, long K,
                                       long i_lo, long i_hi, int bins = 16);

struct NetOptions {
  std::vector<long> K_set{1, 2};
  long n_max = 100000;
  long i_budget = 100000;
  long sep_lo = 1000;
  int sep_bins = 16;
  int grid_points = 32;
  long index_multiplier = 1;      // [G:G_i] = index_multiplier * i
  std::optional<double> baker_D;  // consistency floor check when present
  Tolerances tol;
};

struct RecordRow {
  long K = 0;
  long n = 0;      // record exponent
  long level = 0;  // K * n
  double distance = 0;
  double alpha = 0;
  bool degenerate = false;
};

struct CounterexampleReport {
  NSValue ns;
  bool all_roots_of_unity = false;
  bool exact_records = true;  // false when the root was not rational-certified
  double primary_angle = 0;   // l with primary root exp(2 pi i l)
  std::vector<RecordRow> record_rows;
  SeparatedResult separated;
  std::vector<std::pair<long, double>> separated_samples;  // (level, alpha)
  std::map<long, double> samples;                          // all usable levels
  NetEstimate net;
  std::optional<double> liminf_floor_value;
  bool floor_respected = true;  // every sample above the floor, when present

  nlohmann::json to_json() const;
};

/// The end-to-end net experiment: alpha samples at record levels, separated
/// levels and a log grid, assembled into a NetEstimate.  Requires a finite
/// alpha^(2) (some unit-circle root); throws HypothesisError otherwise.
CounterexampleReport counterexample_report(const LaurentPoly& p,
                                           const NetOptions& opts = {});

/// Matrix version: Diophantine targeting is driven by the last invariant
/// factor, alpha samples come from the matrix's own quotients.
CounterexampleReport counterexample_report(const LaurentMatrix& A,
                                           const NetOptions& opts = {});

}  // namespace nsalpha
