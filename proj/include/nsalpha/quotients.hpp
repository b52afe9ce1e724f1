#pragma once

#include <vector>

#include <Eigen/Core>

#include "nsalpha/ns_exact.hpp"

namespace nsalpha {

struct Tolerances {
  double tol_rank = 1e-8;     // relative threshold separating zero from sigma+
  double tol_cluster = 1e-6;  // relative width of the m+ multiplicity cluster
  /// Relative size of sigma+ below which extended-precision re-evaluation of
  /// the candidate minima kicks in (1x1 matrices only).
  double escalation_threshold = 1e-6;
};

/// A(zeta_i^k) for k = 0..i-1: the Fourier blocks of the level-i quotient.
std::vector<Eigen::MatrixXcd> dft_blocks(const LaurentMatrix& A, long i);

/// Dense block-circulant matrix of the level-i quotient (ri x si); independent
/// oracle for dft_blocks.  Capped at 4096 x 4096.
Eigen::MatrixXcd dense_circulant(const LaurentMatrix& A, long i);

/// Level-i quotient of a group-ring matrix: dense (r n i) x (s n i) complex
/// matrix of the right regular representation on Z_i \ G.  Capped at
/// 4096 x 4096.
Eigen::MatrixXcd build_quotient_dense(const GroupRingMatrix& A, long i);

/// Ascending singular values (including zeros) of a dense complex matrix.
std::vector<double> singular_values(const Eigen::MatrixXcd& M);

/// deg gcd(p, z^i - 1), computed exactly via binary powering of z modulo the
/// ordinary representative of p: the number of distinct shared roots with the
/// i-th roots of unity.
long exact_zero_count(const LaurentPoly& p, long i);

/// Exact rank of the level-i quotient from Smith invariant factors:
/// sum over factors of (i - exact_zero_count(p_l, i)).
long exact_rank_level(const std::vector<LaurentPoly>& factors, long i);

/// Factored form |c| * prod |z - a|^mu of the ordinary representative, for
/// cancellation-free evaluation near roots.
struct EvalPlan {
  BigFloat lead_abs;
  std::vector<std::pair<BigComplex, int>> roots;
};
EvalPlan make_eval_plan(const LaurentPoly& p);

struct SpectralSample {
  long level = 0;
  long group_order = 0;  // index [G : G_i]; equals level for G = Z
  long rank = 0;
  double sigma_plus = 0;  // smallest positive singular value
  long m_plus = 0;        // multiplicity cluster size at sigma_plus
  double alpha = 0;       // log(m_plus / group_order) / log(sigma_plus)
  bool zero_matrix = false;
  bool full_kernel = false;  // rank 0 at this level
  bool degenerate = false;   // sigma_plus ~ 1: alpha undefined
  bool escalated = false;    // extended precision was used for sigma_plus
  int precision_bits = 53;
};

/// Alpha number of the level-i quotient of a Laurent matrix.  group_order is
/// the index of the corresponding finite-index subgroup (i for G = Z, n*i for
/// a virtually cyclic G whose restriction A is).  For 1x1 matrices the rank is
/// taken from exact_zero_count and small singular values are re-evaluated at
/// extended precision through the factored plan; a disagreement between the
/// numeric rank decision and the exact count raises PrecisionError.
SpectralSample spectral_sample(const LaurentMatrix& A, long i, long group_order,
                               const Tolerances& tol = {},
                               const EvalPlan* plan = nullptr);

/// Spectral distribution step function at level i: F(lambda) = (number of
/// singular values <= lambda) / group_order, as (sigma, F) jump points with
/// clustered sigma values.
struct StepSDF {
  long level = 0;
  long group_order = 0;
  double kernel_fraction = 0;                 // F(0)
  std::vector<std::pair<double, double>> steps;  // (sigma, F(sigma)), ascending
};
StepSDF sdf_step(const LaurentMatrix& A, long i, long group_order,
                 const Tolerances& tol = {});

}  // namespace nsalpha
