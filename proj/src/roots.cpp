#include "nsalpha/roots.hpp"

#include <Eigen/Dense>

namespace nsalpha {

std::vector<cdouble> companion_roots(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("companion_roots: zero polynomial");
  LaurentPoly q = p.monic_zero_valuation();
  long d = q.degree();
  if (d == 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (long i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (long i = 0; i < d; ++i) comp(i, d - 1) = -q.coeff(i).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cdouble> roots;
  roots.reserve(d);
  for (long i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

BigComplex polish_root(const LaurentPoly& p, BigComplex x, int max_iter) {
  LaurentPoly q = p.monic_zero_valuation();
  LaurentPoly dq = q.derivative();
  const BigFloat tol = pow(BigFloat(2), -(big_float_bits() - 8));
  for (int it = 0; it < max_iter; ++it) {
    BigComplex fx = eval_big(q, x);
    BigComplex dfx = eval_big(dq, x);
    if (dfx == BigComplex(0, 0)) break;
    BigComplex step = fx / dfx;
    x -= step;
    if (abs(step) <= tol * (1 + abs(x))) break;
  }
  return x;
}

std::vector<BigComplex> refined_roots(const LaurentPoly& p) {
  std::vector<BigComplex> out;
  for (cdouble r : companion_roots(p)) out.push_back(polish_root(p, to_big(r)));
  return out;
}

}  // namespace nsalpha
