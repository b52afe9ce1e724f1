#include "nsalpha/quotients.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "nsalpha/roots.hpp"

namespace nsalpha {

namespace {

constexpr long kDenseCap = 4096;

BigFloat big_rational(const Rational& q) {
  return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
}

double nan_d() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

std::vector<Eigen::MatrixXcd> dft_blocks(const LaurentMatrix& A, long i) {
  if (i <= 0) throw std::invalid_argument("dft_blocks: level must be positive");
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(i);
  const double two_pi = 2 * M_PI;
  for (long k = 0; k < i; ++k) {
    cdouble z = std::polar(1.0, two_pi * k / i);
    Eigen::MatrixXcd B(A.rows(), A.cols());
    for (int r = 0; r < A.rows(); ++r)
      for (int c = 0; c < A.cols(); ++c) B(r, c) = eval_complex(A.at(r, c), z);
    blocks.push_back(std::move(B));
  }
  return blocks;
}

Eigen::MatrixXcd dense_circulant(const LaurentMatrix& A, long i) {
  if (i <= 0) throw std::invalid_argument("dense_circulant: level must be positive");
  const long R = A.rows() * i, C = A.cols() * i;
  if (R > kDenseCap || C > kDenseCap)
    throw ResourceError("dense_circulant: size exceeds the dense cap");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(R, C);
  for (int p = 0; p < A.rows(); ++p)
    for (int q = 0; q < A.cols(); ++q)
      for (const auto& [m, c] : A.at(p, q).terms()) {
        long shift = ((m % i) + i) % i;
        for (long a = 0; a < i; ++a)
          M(p * i + a, q * i + (a + shift) % i) += c.to_complex();
      }
  return M;
}

Eigen::MatrixXcd build_quotient_dense(const GroupRingMatrix& A, long i) {
  if (i <= 0) throw std::invalid_argument("build_quotient_dense: level must be positive");
  const VCGroupSpec& s = A.spec();
  const long n = s.n;
  const long R = A.rows() * n * i, C = A.cols() * n * i;
  if (R > kDenseCap || C > kDenseCap)
    throw ResourceError("build_quotient_dense: size exceeds the dense cap");
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(R, C);
  for (int p = 0; p < A.rows(); ++p)
    for (int q = 0; q < A.cols(); ++q)
      for (const auto& [g, c] : A.at(p, q).terms())
        for (int u = 0; u < n; ++u) {
          int v = s.mul_q(u, g.q);
          GroupElement w = group_mul(s, GroupElement{0, u}, g);
          long m0 = group_mul(s, w, group_inv(s, GroupElement{0, v})).k;
          long shift = ((m0 % i) + i) % i;
          for (long k = 0; k < i; ++k)
            M(p * n * i + u * i + k, q * n * i + v * i + (k + shift) % i) +=
                c.to_complex();
        }
  return M;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
  std::sort(out.begin(), out.end());
  return out;
}

long exact_zero_count(const LaurentPoly& p, long i) {
  if (i <= 0) throw std::invalid_argument("exact_zero_count: level must be positive");
  if (p.is_zero()) throw std::invalid_argument("exact_zero_count: zero polynomial");
  LaurentPoly q = p.monic_zero_valuation();
  const long d = q.span();
  if (d == 0) return 0;

  // z^i modulo q by binary powering on dense coefficient vectors.
  auto mulmod = [&](const std::vector<GaussianRational>& a,
                    const std::vector<GaussianRational>& b) {
    std::vector<GaussianRational> conv(2 * d - 1);
    for (long x = 0; x < d; ++x) {
      if (a[x].is_zero()) continue;
      for (long y = 0; y < d; ++y) conv[x + y] += a[x] * b[y];
    }
    for (long e = 2 * d - 2; e >= d; --e) {
      if (conv[e].is_zero()) continue;
      GaussianRational c = conv[e];
      conv[e] = GaussianRational();
      for (long j = 0; j < d; ++j) conv[e - d + j] -= c * q.coeff(j);
    }
    conv.resize(d);
    return conv;
  };

  std::vector<GaussianRational> res(d), base(d);
  res[0] = GaussianRational(1L);
  if (d == 1)
    base[0] = -q.coeff(0);
  else
    base[1] = GaussianRational(1L);
  long e = i;
  while (e > 0) {
    if (e & 1) res = mulmod(res, base);
    e >>= 1;
    if (e > 0) base = mulmod(base, base);
  }

  LaurentPoly residue;
  for (long j = 0; j < d; ++j)
    if (!res[j].is_zero()) residue.set(j, res[j]);
  residue -= LaurentPoly(GaussianRational(1L));
  if (residue.is_zero()) return d;  // q divides z^i - 1
  return poly_gcd(q, residue).span();
}

long exact_rank_level(const std::vector<LaurentPoly>& factors, long i) {
  long rank = 0;
  for (const auto& p : factors) rank += i - exact_zero_count(p, i);
  return rank;
}

EvalPlan make_eval_plan(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("make_eval_plan: zero polynomial");
  EvalPlan plan;
  plan.lead_abs = sqrt(big_rational(p.leading().norm_sq()));
  for (const auto& [f, mult] : squarefree_decomposition(p))
    for (const BigComplex& r : refined_roots(f)) plan.roots.emplace_back(r, mult);
  return plan;
}

namespace {

/// Shared tail: sigma+, m+, alpha, flags from the ascending multiset of
/// singular values and an already-decided rank.
void finish_sample(SpectralSample& out, const std::vector<double>& ascending,
                   const Tolerances& tol) {
  const long total = static_cast<long>(ascending.size());
  const long zeros = total - out.rank;
  if (out.rank == 0) {
    out.full_kernel = true;
    out.sigma_plus = nan_d();
    out.m_plus = 0;
    out.alpha = nan_d();
    return;
  }
  out.sigma_plus = ascending[zeros];
  out.m_plus = 0;
  for (long j = zeros; j < total; ++j) {
    if (ascending[j] <= out.sigma_plus * (1 + tol.tol_cluster))
      ++out.m_plus;
    else
      break;
  }
  if (std::abs(out.sigma_plus - 1.0) <= tol.tol_cluster) {
    out.degenerate = true;
    out.alpha = nan_d();
    return;
  }
  out.alpha = std::log(static_cast<double>(out.m_plus) / out.group_order) /
              std::log(out.sigma_plus);
}

SpectralSample sample_scalar(const LaurentPoly& p, long i, long group_order,
                             const Tolerances& tol, const EvalPlan* plan) {
  SpectralSample out;
  out.level = i;
  out.group_order = group_order;
  if (p.is_zero()) {
    out.zero_matrix = true;
    out.full_kernel = true;
    out.sigma_plus = nan_d();
    out.alpha = nan_d();
    return out;
  }
  std::vector<double> vals(i);
  const double two_pi = 2 * M_PI;
  for (long k = 0; k < i; ++k)
    vals[k] = std::abs(eval_complex(p, std::polar(1.0, two_pi * k / i)));
  const long zc = exact_zero_count(p, i);
  out.rank = i - zc;
  const double sigma_max = *std::max_element(vals.begin(), vals.end());

  std::sort(vals.begin(), vals.end());
  bool need_escalation = false;
  long numeric_zeros = 0;
  while (numeric_zeros < i && vals[numeric_zeros] <= tol.tol_rank * sigma_max)
    ++numeric_zeros;
  if (numeric_zeros != zc) need_escalation = true;
  if (zc < i && vals[zc] < tol.escalation_threshold * sigma_max) need_escalation = true;

  if (need_escalation && out.rank > 0) {
    EvalPlan local;
    if (!plan) {
      local = make_eval_plan(p);
      plan = &local;
    }
    // Re-evaluate every suspiciously small value through the factored form.
    const double band = std::max(tol.escalation_threshold, 10 * tol.tol_rank) * sigma_max;
    std::vector<double> keep;
    std::vector<BigFloat> small;
    for (long k = 0; k < i; ++k) {
      double v = std::abs(eval_complex(p, std::polar(1.0, two_pi * k / i)));
      if (v <= band)
        small.push_back(eval_factored_abs(plan->lead_abs, plan->roots, unit_root_big(i, k)));
      else
        keep.push_back(v);
    }
    std::sort(small.begin(), small.end());
    long zeros_big = 0;
    const BigFloat zero_band = BigFloat(1e-30) * sigma_max;
    while (zeros_big < static_cast<long>(small.size()) && small[zeros_big] <= zero_band)
      ++zeros_big;
    if (zeros_big != zc) {
      std::ostringstream os;
      os << "spectral_sample: exact kernel count " << zc << " at level " << i
         << " disagrees with escalated numeric count " << zeros_big;
      throw PrecisionError(os.str());
    }
    vals.clear();
    for (const BigFloat& b : small) vals.push_back(to_double(b));
    vals.insert(vals.end(), keep.begin(), keep.end());
    std::sort(vals.begin(), vals.end());
    out.escalated = true;
    out.precision_bits = big_float_bits();
  } else if (numeric_zeros != zc) {
    std::ostringstream os;
    os << "spectral_sample: exact kernel count " << zc << " at level " << i
       << " disagrees with numeric count " << numeric_zeros;
    throw PrecisionError(os.str());
  }

  finish_sample(out, vals, tol);
  return out;
}

}  // namespace

SpectralSample spectral_sample(const LaurentMatrix& A, long i, long group_order,
                               const Tolerances& tol, const EvalPlan* plan) {
  if (i <= 0) throw std::invalid_argument("spectral_sample: level must be positive");
  if (group_order <= 0)
    throw std::invalid_argument("spectral_sample: group order must be positive");
  if (A.rows() == 1 && A.cols() == 1)
    return sample_scalar(A.at(0, 0), i, group_order, tol, plan);

  SpectralSample out;
  out.level = i;
  out.group_order = group_order;
  if (A.is_zero()) {
    out.zero_matrix = true;
    out.full_kernel = true;
    out.sigma_plus = nan_d();
    out.alpha = nan_d();
    return out;
  }
  std::vector<double> vals;
  for (const auto& B : dft_blocks(A, i)) {
    auto sv = singular_values(B);
    vals.insert(vals.end(), sv.begin(), sv.end());
  }
  std::sort(vals.begin(), vals.end());
  const double sigma_max = vals.back();
  long zeros = 0;
  while (zeros < static_cast<long>(vals.size()) &&
         vals[zeros] <= tol.tol_rank * sigma_max)
    ++zeros;
  out.rank = static_cast<long>(vals.size()) - zeros;
  finish_sample(out, vals, tol);
  return out;
}

StepSDF sdf_step(const LaurentMatrix& A, long i, long group_order,
                 const Tolerances& tol) {
  if (i <= 0) throw std::invalid_argument("sdf_step: level must be positive");
  StepSDF out;
  out.level = i;
  out.group_order = group_order;
  if (A.is_zero()) {
    out.kernel_fraction =
        static_cast<double>(std::min(A.rows(), A.cols())) * i / group_order;
    return out;
  }
  std::vector<double> vals;
  for (const auto& B : dft_blocks(A, i)) {
    auto sv = singular_values(B);
    vals.insert(vals.end(), sv.begin(), sv.end());
  }
  std::sort(vals.begin(), vals.end());
  const double sigma_max = vals.back();
  long idx = 0;
  const long total = static_cast<long>(vals.size());
  while (idx < total && vals[idx] <= tol.tol_rank * sigma_max) ++idx;
  out.kernel_fraction = static_cast<double>(idx) / group_order;
  while (idx < total) {
    double rep = vals[idx];
    long count = 0;
    while (idx < total && vals[idx] <= rep * (1 + tol.tol_cluster)) {
      ++count;
      ++idx;
    }
    double prev = out.steps.empty() ? out.kernel_fraction : out.steps.back().second;
    out.steps.emplace_back(rep, prev + static_cast<double>(count) / group_order);
  }
  return out;
}

}  // namespace nsalpha
