// End-to-end acceptance checks.  Each criterion prints a single PASS/FAIL
// line; the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace nsalpha;
using testutil::P;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

void run(int number, const std::string& name,
         const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report(number, name, ok, detail);
  } catch (const std::exception& e) {
    report(number, name, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main() {
  // Criteria 3 and 4 share one full net experiment; run it once up front.
  CounterexampleReport rep;
  bool rep_ok = true;
  std::string rep_err;
  double rep_seconds = 0;
  {
    auto t0 = std::chrono::steady_clock::now();
    try {
      NetOptions opts;
      opts.K_set = {1};
      opts.n_max = 100000;
      opts.i_budget = 100000;
      opts.sep_lo = 1000;
      opts.baker_D = 10.0;
      rep = counterexample_report(testutil::counterexample_poly(), opts);
    } catch (const std::exception& e) {
      rep_ok = false;
      rep_err = e.what();
    }
    rep_seconds = seconds_since(t0);
  }

  run(1, "z-1 convergence", []() -> std::pair<bool, std::string> {
    auto t0 = std::chrono::steady_clock::now();
    LaurentMatrix A = LaurentMatrix::scalar(testutil::z_minus_1());
    std::vector<long> levels{3, 10, 100, 1000, 10000};
    bool ok = true;
    std::string detail;
    double a1e4 = 0, prev = 0;
    bool decreasing = true;
    for (long i : levels) {
      SpectralSample s = spectral_sample(A, i, i);
      double closed = testutil::z_minus_1_alpha(i);
      if (std::abs(s.alpha - closed) > 1e-9 * std::abs(closed)) {
        ok = false;
        detail += "mismatch at i=" + std::to_string(i) + "; ";
      }
      if (i >= 10) {
        if (prev != 0 && !(s.alpha < prev)) decreasing = false;
        prev = s.alpha;
      }
      if (i == 10000) a1e4 = s.alpha;
    }
    if (std::abs(a1e4 - 1) > 0.16) {
      ok = false;
      detail += "alpha(1e4)=" + fmt(a1e4) + " too far from 1; ";
    }
    if (!decreasing) {
      ok = false;
      detail += "not strictly decreasing for i >= 10; ";
    }
    double secs = seconds_since(t0);
    if (secs >= 5) {
      ok = false;
      detail += "too slow; ";
    }
    detail += "alpha(1e4)=" + fmt(a1e4) + ", " + fmt(secs) + "s";
    return {ok, detail};
  });

  run(2, "exact Novikov-Shubin values", []() -> std::pair<bool, std::string> {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    auto expect = [&](const char* label, const NSValue& got, const NSValue& want) {
      if (!(got == want)) {
        ok = false;
        detail += std::string(label) + ": got " + got.str() + " want " + want.str() + "; ";
      }
    };
    expect("z-1", ns_number(testutil::z_minus_1()), NSValue::finite(1));
    expect("5z^2-6z+5", ns_number(testutil::counterexample_poly()), NSValue::finite(1));
    LaurentPoly zm1 = testutil::z_minus_1();
    expect("(z-1)^2", ns_number(zm1 * zm1), NSValue::finite(2));
    expect("z-2", ns_number(P({{1, 1, 0}, {0, -2, 0}})), NSValue::inf_plus());
    LaurentMatrix hop(2, 2);
    hop.at(0, 0) = LaurentPoly::z();
    hop.at(0, 1) = P({{0, 1, 0}});
    hop.at(1, 0) = P({{0, 1, 0}});
    hop.at(1, 1) = LaurentPoly::z();
    expect("[[z,1],[1,z]]", ns_number_matrix(hop), NSValue::finite(1));
    expect("x+t over ZxZ2", ns_number_group(testutil::xt_matrix(VCGroupSpec::ZxZ2())),
           NSValue::finite(1));
    double secs = seconds_since(t0);
    if (secs >= 6) {
      ok = false;
      detail += "too slow; ";
    }
    detail += fmt(secs) + "s";
    return {ok, detail};
  });

  run(3, "record-index liminf pressure", [&]() -> std::pair<bool, std::string> {
    if (!rep_ok) return {false, "report failed: " + rep_err};
    bool ok = true;
    std::string detail;
    std::vector<double> alphas;
    for (const auto& row : rep.record_rows) {
      if (row.degenerate || row.level < 2) continue;  // no usable alpha there
      alphas.push_back(row.alpha);
    }
    if (alphas.size() < 3) return {false, "too few usable record samples"};
    double minv = alphas[0];
    for (double a : alphas) minv = std::min(minv, a);
    if (!(minv <= 0.65)) {
      ok = false;
      detail += "min=" + fmt(minv) + " > 0.65; ";
    }
    for (double a : alphas)
      if (!(a > 0.5)) {
        ok = false;
        detail += "sample " + fmt(a) + " <= 0.5; ";
      }
    // Eventually strictly decreasing: the final suffix of the sequence
    // decreases (at finite budget only the tail behaviour is observable).
    if (!(alphas.back() < alphas[alphas.size() - 2])) {
      ok = false;
      detail += "no decreasing tail; ";
    }
    if (!rep.liminf_floor_value || !rep.floor_respected) {
      ok = false;
      detail += "floor check failed; ";
    }
    if (rep_seconds >= 600) {
      ok = false;
      detail += "too slow; ";
    }
    detail += "min=" + fmt(minv) + ", last=" + fmt(alphas.back()) + ", " +
              std::to_string(alphas.size()) + " samples, report " + fmt(rep_seconds) + "s";
    return {ok, detail};
  });

  run(4, "separated-index limsup attainment", [&]() -> std::pair<bool, std::string> {
    if (!rep_ok) return {false, "report failed: " + rep_err};
    bool ok = true;
    std::string detail;
    std::vector<std::pair<long, double>> sep = rep.separated_samples;  // (level, alpha)
    std::sort(sep.begin(), sep.end());
    if (sep.empty()) return {false, "no separated samples"};
    double lo = 1e300, hi = -1e300;
    for (const auto& [lvl, a] : sep) {
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    if (!(lo >= 0.85 && hi <= 1.5)) {
      ok = false;
      detail += "alpha range [" + fmt(lo) + ", " + fmt(hi) + "] not within [0.85, 1.5]; ";
    }
    // Existence of a log-spaced subfamily (consecutive level ratio >= 2,
    // reaching the top decade) with nonincreasing deviation |alpha - 1|.
    bool chain_found = false;
    long top = sep.back().first;
    std::function<bool(size_t, double, int)> extend = [&](size_t idx, double dev,
                                                          int len) -> bool {
      if (sep[idx].first * 10 >= top && len >= 3) return true;
      for (size_t j = idx + 1; j < sep.size(); ++j) {
        if (sep[j].first < 2 * sep[idx].first) continue;
        double d = std::abs(sep[j].second - 1);
        if (d <= dev + 1e-12 && extend(j, d, len + 1)) return true;
      }
      return false;
    };
    for (size_t i = 0; i < sep.size() && !chain_found; ++i) {
      if (sep[i].first * 8 > top) break;  // leave room for at least 3 doublings
      chain_found = extend(i, std::abs(sep[i].second - 1), 1);
    }
    if (!chain_found) {
      ok = false;
      detail += "no log-spaced subfamily with nonincreasing deviation; ";
    }
    detail += "range [" + fmt(lo) + ", " + fmt(hi) + "], " +
              std::to_string(sep.size()) + " separated samples, R=" + fmt(rep.separated.R);
    return {ok, detail};
  });

  run(5, "Smith normal form correctness", []() -> std::pair<bool, std::string> {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 50 && ok; ++t) {
      LaurentMatrix A = testutil::random_matrix(rng, 3, 3, 0, 2);
      // smith_normal_form verifies S*A*T = diag and the divisibility chain
      // exactly, throwing on any violation.
      SNFResult r = smith_normal_form(A);
      auto d = determinantal_divisors(A);
      if (static_cast<int>(d.size()) != r.rank) {
        ok = false;
        detail += "rank mismatch at trial " + std::to_string(t) + "; ";
        break;
      }
      LaurentPoly prev(GaussianRational(1L));
      for (int l = 0; l < r.rank; ++l) {
        if (!(r.factors[l] == poly_div_exact(d[l], prev).monic_zero_valuation())) {
          ok = false;
          detail += "factor mismatch at trial " + std::to_string(t) + "; ";
        }
        prev = d[l];
      }
      LaurentMatrix B = A;
      B.swap_rows(0, 2);
      B.swap_cols(0, 1);
      SNFResult rb = smith_normal_form(B);
      if (rb.rank != r.rank || !(rb.factors == r.factors)) {
        ok = false;
        detail += "permutation variance at trial " + std::to_string(t) + "; ";
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 60) {
      ok = false;
      detail += "too slow; ";
    }
    detail += "50 matrices, " + fmt(secs) + "s";
    return {ok, detail};
  });

  run(6, "block DFT vs dense circulant oracle", []() -> std::pair<bool, std::string> {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(103);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 8 && ok; ++t) {
      LaurentMatrix A = testutil::random_matrix(rng, 2, 2, -1, 2);
      for (long i = 1; i <= 12; ++i) {
        std::vector<double> via_blocks;
        for (const auto& B : dft_blocks(A, i)) {
          auto sv = singular_values(B);
          via_blocks.insert(via_blocks.end(), sv.begin(), sv.end());
        }
        if (!testutil::sigma_multisets_match(singular_values(dense_circulant(A, i)),
                                             via_blocks, 1e-9)) {
          ok = false;
          detail += "mismatch trial " + std::to_string(t) + " i=" + std::to_string(i) + "; ";
          break;
        }
      }
    }
    double secs = seconds_since(t0);
    if (secs >= 10) {
      ok = false;
      detail += "too slow; ";
    }
    detail += fmt(secs) + "s";
    return {ok, detail};
  });

  run(7, "group quotient equals restricted quotient", []() -> std::pair<bool, std::string> {
    std::mt19937 rng(107);
    std::vector<GroupRingMatrix> mats;
    mats.push_back(testutil::xt_matrix(VCGroupSpec::Dinf()));
    mats.push_back(testutil::xt_matrix(VCGroupSpec::ZxZ2()));
    for (const char* name : {"Dinf", "ZxZ2"}) {
      VCGroupSpec s = VCGroupSpec::named(name);
      GroupRingMatrix A(s, 2, 2);
      std::uniform_int_distribution<long> coeff(-2, 2);
      std::uniform_int_distribution<int> kd(-1, 1), qd(0, 1);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int u = 0; u < 3; ++u)
            A.at(i, j).set({kd(rng), qd(rng)}, GaussianRational(coeff(rng), coeff(rng)));
      mats.push_back(A);
    }
    for (const auto& A : mats)
      for (long i = 1; i <= 8; ++i)
        if (!testutil::sigma_multisets_match(
                singular_values(build_quotient_dense(A, i)),
                singular_values(dense_circulant(restrict_to_Z(A), i)), 1e-9))
          return {false, "spectrum mismatch at i=" + std::to_string(i)};
    return {true, "4 matrices x levels 1..8"};
  });

  run(8, "net extrema strictness", []() -> std::pair<bool, std::string> {
    std::map<long, double> alt;
    for (long i = 1; i <= 1000; ++i) alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
    NetEstimate e1 = net_extrema(alt, {1, 2}, 1000);
    bool ok = std::abs(e1.liminf_est - 1.0) < 1e-12;
    std::string detail = "alternating net-liminf=" + fmt(e1.liminf_est);

    const long N = 10000;
    std::vector<long> spf(N + 1, 0);
    for (long p = 2; p <= N; ++p)
      if (spf[p] == 0)
        for (long m = p; m <= N; m += p)
          if (spf[m] == 0) spf[m] = p;
    std::map<long, double> liou;
    for (long i = 1; i <= N; ++i) {
      long m = i;
      int omega = 0;
      while (m > 1) {
        m /= spf[m];
        ++omega;
      }
      liou[i] = (omega % 2 == 0) ? 1.0 : -1.0;
    }
    NetEstimate e2 = net_extrema(liou, {1, 2, 3}, N);
    if (!(std::abs(e2.liminf_est + 1) < 1e-12 && std::abs(e2.limsup_est - 1) < 1e-12)) {
      ok = false;
      detail += "; completely multiplicative case wrong";
    }
    return {ok, detail};
  });

  run(9, "circle runner bound on all records", []() -> std::pair<bool, std::string> {
    GaussianRational a = testutil::ce_root();
    RecordSearchResult rs = best_approx_records(a, 1, 10000);
    std::vector<long> ns;
    for (const auto& r : rs.records) ns.push_back(r.n);
    auto rows10 = circle_runner_check(a, 10.0, ns);
    for (const auto& r : rows10)
      if (r.skipped || !r.ok)
        return {false, "bound fails at n=" + std::to_string(r.n) + " for D=10"};
    auto rows2 = circle_runner_check(a, 2.0, ns);
    for (size_t i = 0; i < ns.size(); ++i)
      if (rows2[i].ok && !rows10[i].ok)
        return {false, "not monotone in D at n=" + std::to_string(ns[i])};
    return {true, std::to_string(ns.size()) + " record exponents, D in {2, 10}"};
  });

  run(10, "local growth exponents match multiplicities", []() -> std::pair<bool, std::string> {
    LaurentPoly zm1 = testutil::z_minus_1();
    LaurentPoly z2m1 = P({{2, 1, 0}, {0, -1, 0}});
    std::vector<LaurentPoly> polys{zm1, zm1 * zm1, testutil::counterexample_poly(),
                                   z2m1 * z2m1};
    double worst = 0;
    for (const auto& p : polys) {
      for (const auto& root : unit_circle_roots(p)) {
        std::vector<double> xs, ys;
        for (int j = 0; j <= 12; ++j) {
          BigFloat t = pow(BigFloat(10), -6 + 0.25 * j);
          BigFloat th = 2 * big_pi() * t;
          BigComplex zv = root.approx * BigComplex(cos(th), sin(th));
          xs.push_back(std::log(to_double(t)));
          ys.push_back(std::log(to_double(abs(eval_big(p, zv)))));
        }
        double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t j = 0; j < xs.size(); ++j) {
          sx += xs[j];
          sy += ys[j];
          sxx += xs[j] * xs[j];
          sxy += xs[j] * ys[j];
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        worst = std::max(worst, std::abs(slope - root.multiplicity));
      }
    }
    return {worst < 0.05, "max |fit - multiplicity| = " + fmt(worst)};
  });

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
