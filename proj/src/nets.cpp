#include "nsalpha/nets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nsalpha {

namespace {

BigFloat big_rational(const Rational& q) {
  return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
}

/// Best rational approximation of x with denominator <= max_den, by the
/// continued fraction of x.
Rational rational_reconstruct(BigFloat x, long max_den) {
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // convergents h_{-2}/k_{-2}, h_{-1}/k_{-1}
  bool neg = x < 0;
  if (neg) x = -x;
  for (int it = 0; it < 64; ++it) {
    BigFloat fl = floor(x);
    if (fl > BigFloat(1e17)) break;  // effectively rational already
    mpz_class a(fl.convert_to<long>());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigFloat rem = x - fl;
    if (rem < BigFloat("1e-40")) break;
    x = 1 / rem;
  }
  Rational r(neg ? -p1 : p1, q1);
  r.canonicalize();
  return r;
}

GaussianRational eval_exact(const LaurentPoly& p, const GaussianRational& a) {
  if (p.is_zero()) return GaussianRational();
  GaussianRational acc;
  for (long e = p.degree(); e >= p.valuation(); --e)
    acc = acc * a + p.coeff(e);
  long v = p.valuation();
  if (v != 0) {
    GaussianRational av = v > 0 ? a : a.inverse();
    for (long j = 0; j < std::labs(v); ++j) acc = acc * av;
  }
  return acc;
}

double fractional_distance_to_integers(const BigFloat& phi) {
  BigFloat m = phi < BigFloat(0.5) ? phi : 1 - phi;
  return to_double(2 * sin(big_pi() * m));
}

}  // namespace

NetEstimate net_extrema(const std::map<long, double>& samples,
                        const std::vector<long>& K_set, long i_max) {
  if (samples.empty()) throw std::invalid_argument("net_extrema: no samples");
  if (K_set.empty()) throw std::invalid_argument("net_extrema: empty K_set");
  NetEstimate out;
  bool first = true;
  for (long K : K_set) {
    if (K <= 0) throw std::invalid_argument("net_extrema: K must be positive");
    NetEstimate::PerK pk;
    pk.K = K;
    for (const auto& [lvl, val] : samples) {
      if (lvl > i_max || lvl % K != 0) continue;
      out.budget++;
      if (pk.count == 0 || val < pk.inf_val) {
        pk.inf_val = val;
        pk.inf_witness = lvl;
      }
      if (pk.count == 0 || val > pk.sup_val) {
        pk.sup_val = val;
        pk.sup_witness = lvl;
      }
      pk.count++;
    }
    if (pk.count == 0) {
      out.skipped_K.push_back(K);
      continue;
    }
    out.per_k.push_back(pk);
    if (first || pk.inf_val > out.liminf_est) {
      out.liminf_est = pk.inf_val;
      out.liminf_K = K;
    }
    if (first || pk.sup_val < out.limsup_est) {
      out.limsup_est = pk.sup_val;
      out.limsup_K = K;
    }
    first = false;
  }
  if (first) throw std::invalid_argument("net_extrema: no K with sampled multiples");
  return out;
}

nlohmann::json NetEstimate::to_json() const {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& pk : per_k)
    per.push_back({{"K", pk.K},
                   {"inf", pk.inf_val},
                   {"sup", pk.sup_val},
                   {"inf_witness", pk.inf_witness},
                   {"sup_witness", pk.sup_witness},
                   {"count", pk.count}});
  return {{"liminf_est", liminf_est}, {"limsup_est", limsup_est},
          {"liminf_K", liminf_K},     {"limsup_K", limsup_K},
          {"per_K", per},             {"skipped_K", skipped_K},
          {"budget", budget}};
}

RecordSearchResult best_approx_records(const GaussianRational& a, long K, long n_max) {
  if (K <= 0) throw std::invalid_argument("best_approx_records: K must be positive");
  if (n_max <= 0) throw std::invalid_argument("best_approx_records: n_max must be positive");
  if (a.norm_sq() != 1)
    throw std::invalid_argument("best_approx_records: |a| must be exactly 1");
  if (a == GaussianRational(1L))
    throw std::invalid_argument("best_approx_records: a must differ from 1");

  // a = (x + i y) / d with integer x, y, d.
  mpz_class d;
  mpz_lcm(d.get_mpz_t(), a.re.get_den().get_mpz_t(), a.im.get_den().get_mpz_t());
  mpz_class x = a.re.get_num() * (d / a.re.get_den());
  mpz_class y = a.im.get_num() * (d / a.im.get_den());

  // b = a^K = (xb + i yb) / db by exact binary powering.
  mpz_class xb = 1, yb = 0, db;
  mpz_pow_ui(db.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(K));
  {
    mpz_class px = x, py = y;
    long e = K;
    while (e > 0) {
      if (e & 1) {
        mpz_class nx = xb * px - yb * py;
        yb = xb * py + yb * px;
        xb = nx;
      }
      e >>= 1;
      if (e > 0) {
        mpz_class nx = px * px - py * py;
        py = 2 * px * py;
        px = nx;
      }
    }
  }

  // Angle of b as a fraction of the full turn, tracked incrementally as a
  // cheap pre-filter; every candidate is confirmed exactly.
  BigFloat step = atan2(big_rational(a.im), big_rational(a.re)) / (2 * big_pi()) * K;
  step -= floor(step);

  RecordSearchResult out;
  mpz_class X = 1, Y = 0, Dp = 1;
  BigFloat phi = 0;
  Rational best_sq;
  bool have = false;
  for (long n = 1; n <= n_max; ++n) {
    mpz_class nx = X * xb - Y * yb;
    Y = X * yb + Y * xb;
    X = nx;
    Dp *= db;
    phi += step;
    phi -= floor(phi);
    if (X == Dp && Y == 0) {
      out.root_of_unity = true;
      out.period = n;
      break;
    }
    double fd = fractional_distance_to_integers(phi);
    if (have && fd >= out.records.back().float_distance * (1 + 1e-9)) continue;
    mpz_class num = (X - Dp) * (X - Dp) + Y * Y;
    Rational ds(num, Dp * Dp);
    ds.canonicalize();
    if (!have || ds < best_sq) {
      best_sq = ds;
      have = true;
      out.records.push_back({n, ds, to_double(sqrt(big_rational(ds)))});
    }
  }
  return out;
}

SeparatedResult separated_index_search(const std::vector<UnitCircleRoot>& roots, long K,
                                       long i_lo, long i_hi, int bins) {
  if (K <= 0 || i_lo < 1 || i_hi < i_lo || bins < 1)
    throw std::invalid_argument("separated_index_search: bad arguments");
  // Conjugate roots share ||i*l||; canonicalize to l in (0, 1/2] and dedupe.
  std::set<std::string> seen;
  std::vector<BigFloat> angles;
  for (const auto& r : roots) {
    if (r.order) continue;
    BigFloat l = r.angle();
    if (l > BigFloat(0.5)) l = 1 - l;
    std::string key = l.str(30, std::ios_base::fixed);
    if (seen.insert(key).second) angles.push_back(l);
  }

  SeparatedResult out;
  if (angles.empty()) {
    // Every root is a (Ki)-th root of unity for suitable i: any index
    // qualifies.  Return a log-spaced family with a conventional R.
    out.trivial = true;
    out.R = 0.25;
    for (int b = 0; b < bins; ++b) {
      double t = std::exp(std::log(static_cast<double>(i_lo)) +
                          (std::log(static_cast<double>(i_hi)) -
                           std::log(static_cast<double>(i_lo))) *
                              b / std::max(1, bins - 1));
      out.indices.emplace_back(std::lround(t), 0.5);
    }
    std::sort(out.indices.begin(), out.indices.end());
    out.indices.erase(std::unique(out.indices.begin(), out.indices.end()),
                      out.indices.end());
    return out;
  }

  std::vector<BigFloat> steps, phases;
  for (const BigFloat& l : angles) {
    BigFloat s = l * K;
    s -= floor(s);
    steps.push_back(s);
    BigFloat p0 = s * (i_lo - 1);
    p0 -= floor(p0);
    phases.push_back(p0);
  }
  const double log_lo = std::log(static_cast<double>(i_lo));
  const double log_hi = std::log(static_cast<double>(i_hi) + 1);
  std::vector<std::pair<long, double>> best(bins, {0, -1.0});
  for (long i = i_lo; i <= i_hi; ++i) {
    double sep = 1;
    for (size_t t = 0; t < phases.size(); ++t) {
      phases[t] += steps[t];
      if (phases[t] >= 1) phases[t] -= 1;
      double m = to_double(phases[t] < BigFloat(0.5) ? phases[t] : 1 - phases[t]);
      sep = std::min(sep, m);
    }
    int b = static_cast<int>(bins * (std::log(static_cast<double>(i)) - log_lo) /
                             (log_hi - log_lo));
    b = std::clamp(b, 0, bins - 1);
    if (sep > best[b].second) best[b] = {i, sep};
  }
  bool first = true;
  for (const auto& [i, sep] : best) {
    if (i == 0 || sep <= 0) continue;
    out.indices.emplace_back(i, sep);
    if (first || sep < out.R) out.R = sep;
    first = false;
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

namespace {

CounterexampleReport counterexample_report_impl(const LaurentMatrix& A,
                                                const LaurentPoly& p,
                                                const NetOptions& opts) {
  CounterexampleReport rep;
  rep.ns = ns_number(p);
  if (!rep.ns.is_finite())
    throw HypothesisError(
        "counterexample_report: no unit-circle roots, alpha^(2) is infinity_plus");
  if (opts.K_set.empty())
    throw std::invalid_argument("counterexample_report: empty K_set");

  auto roots = unit_circle_roots(p);
  std::vector<const UnitCircleRoot*> non_rou;
  for (const auto& r : roots)
    if (!r.order) non_rou.push_back(&r);
  rep.all_roots_of_unity = non_rou.empty();

  EvalPlan plan = make_eval_plan(p);
  std::set<long> levels;
  auto add_level = [&](long lvl) {
    if (lvl >= 3 && lvl <= opts.i_budget) levels.insert(lvl);
  };

  // Background grid: log-spaced multiples of each K.
  for (long K : opts.K_set)
    for (int j = 0; j < opts.grid_points; ++j) {
      double t = std::exp(std::log(3.0) + (std::log(static_cast<double>(opts.i_budget)) -
                                           std::log(3.0)) *
                                              j / std::max(1, opts.grid_points - 1));
      long m = std::max(1L, std::lround(t / K));
      add_level(K * m);
    }

  std::map<long, std::vector<ApproxRecord>> records_by_K;
  if (!rep.all_roots_of_unity) {
    // Primary root: maximal multiplicity, then smallest canonical angle.
    const UnitCircleRoot* primary = non_rou.front();
    auto canon = [](const UnitCircleRoot* r) {
      BigFloat l = r->angle();
      return l > BigFloat(0.5) ? BigFloat(1 - l) : l;
    };
    for (const auto* r : non_rou)
      if (r->multiplicity > primary->multiplicity ||
          (r->multiplicity == primary->multiplicity && canon(r) < canon(primary)))
        primary = r;
    rep.primary_angle = to_double(primary->angle());

    // Exact rational certification of the primary root.
    GaussianRational a(rational_reconstruct(primary->approx.real(), 1000000),
                       rational_reconstruct(primary->approx.imag(), 1000000));
    rep.exact_records = a.norm_sq() == 1 && eval_exact(p, a).is_zero();

    for (long K : opts.K_set) {
      std::vector<ApproxRecord> recs;
      if (rep.exact_records) {
        recs = best_approx_records(a, K, opts.n_max).records;
      } else {
        // Floating fallback: records of the angle distance only.
        BigFloat step = canon(primary) * K;
        step -= floor(step);
        BigFloat phi = 0;
        double best = 2;
        for (long n = 1; n <= opts.n_max; ++n) {
          phi += step;
          phi -= floor(phi);
          double fd = fractional_distance_to_integers(phi);
          if (fd < best) {
            best = fd;
            recs.push_back({n, Rational(-1), fd});
          }
        }
      }
      for (const auto& r : recs) add_level(K * r.n);
      records_by_K[K] = std::move(recs);
    }

  }

  rep.separated = separated_index_search(roots, 1, std::min(opts.sep_lo, opts.i_budget),
                                         opts.i_budget, opts.sep_bins);
  for (const auto& [i, sep] : rep.separated.indices) {
    (void)sep;
    add_level(i);
  }

  std::map<long, SpectralSample> by_level;
  const bool scalar_case = A.rows() == 1 && A.cols() == 1;
  for (long lvl : levels) {
    SpectralSample s = spectral_sample(A, lvl, opts.index_multiplier * lvl, opts.tol,
                                       scalar_case ? &plan : nullptr);
    by_level.emplace(lvl, s);
    // Keep only levels past the sign change (sigma+ < 1): below it alpha is
    // nonpositive and outside the asymptotic regime the net limits describe.
    if (!s.degenerate && !s.full_kernel && !s.zero_matrix && s.sigma_plus < 1)
      rep.samples[lvl] = s.alpha;
  }

  for (long K : opts.K_set)
    for (const auto& r : records_by_K[K]) {
      long lvl = K * r.n;
      auto it = by_level.find(lvl);
      if (it == by_level.end()) continue;
      RecordRow row;
      row.K = K;
      row.n = r.n;
      row.level = lvl;
      row.distance = r.float_distance;
      row.degenerate = it->second.degenerate;
      row.alpha = it->second.alpha;
      rep.record_rows.push_back(row);
    }
  for (const auto& [i, sep] : rep.separated.indices) {
    (void)sep;
    auto it = rep.samples.find(i);
    if (it != rep.samples.end()) rep.separated_samples.emplace_back(i, it->second);
  }

  rep.net = net_extrema(rep.samples, opts.K_set, opts.i_budget);

  if (opts.baker_D) {
    double D = *opts.baker_D;
    if (D < 1) throw std::invalid_argument("counterexample_report: Baker D must be >= 1");
    rep.liminf_floor_value = rep.ns.value() / (1 + D);
    for (const auto& [lvl, alpha] : rep.samples) {
      (void)lvl;
      if (alpha <= *rep.liminf_floor_value) rep.floor_respected = false;
    }
  }
  return rep;
}

}  // namespace

CounterexampleReport counterexample_report(const LaurentPoly& p, const NetOptions& opts) {
  return counterexample_report_impl(LaurentMatrix::scalar(p), p, opts);
}

CounterexampleReport counterexample_report(const LaurentMatrix& A, const NetOptions& opts) {
  if (A.is_zero())
    throw HypothesisError("counterexample_report: zero matrix has a spectral gap");
  return counterexample_report_impl(A, last_invariant_factor(A), opts);
}

nlohmann::json CounterexampleReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : record_rows)
    rows.push_back({{"K", r.K},
                    {"n", r.n},
                    {"level", r.level},
                    {"distance", r.distance},
                    {"alpha", r.alpha},
                    {"degenerate", r.degenerate}});
  nlohmann::json sep = nlohmann::json::array();
  for (const auto& [i, s] : separated.indices) sep.push_back({{"level", i}, {"separation", s}});
  nlohmann::json sep_samples = nlohmann::json::array();
  for (const auto& [i, a] : separated_samples)
    sep_samples.push_back({{"level", i}, {"alpha", a}});
  nlohmann::json all = nlohmann::json::array();
  for (const auto& [i, a] : samples) all.push_back({{"level", i}, {"alpha", a}});
  nlohmann::json j{{"ns", ns.to_json()},
                   {"all_roots_of_unity", all_roots_of_unity},
                   {"exact_records", exact_records},
                   {"primary_angle", primary_angle},
                   {"record_rows", rows},
                   {"separated_R", separated.R},
                   {"separated_trivial", separated.trivial},
                   {"separated_indices", sep},
                   {"separated_samples", sep_samples},
                   {"samples", all},
                   {"net", net.to_json()}};
  if (liminf_floor_value) {
    j["liminf_floor"] = *liminf_floor_value;
    j["floor_respected"] = floor_respected;
  }
  return j;
}

}  // namespace nsalpha
