#include "nsalpha/precision.hpp"

namespace nsalpha {

BigComplex unit_root_big(long n, long k) {
  k %= n;
  if (k < 0) k += n;
  BigFloat theta = 2 * big_pi() * k / n;
  return {cos(theta), sin(theta)};
}

BigComplex to_big(cdouble z) { return {BigFloat(z.real()), BigFloat(z.imag())}; }

cdouble to_cdouble(const BigComplex& z) {
  return {to_double(z.real()), to_double(z.imag())};
}

static BigComplex to_big(const GaussianRational& c) {
  auto conv = [](const Rational& q) {
    return BigFloat(q.get_num().get_str()) / BigFloat(q.get_den().get_str());
  };
  return {conv(c.re), conv(c.im)};
}

BigComplex eval_big(const LaurentPoly& p, const BigComplex& zval) {
  if (zval == BigComplex(0, 0)) throw std::invalid_argument("eval_big: z = 0");
  if (p.is_zero()) return {0, 0};
  long v = p.valuation();
  long d = p.degree();
  BigComplex acc{0, 0};
  for (long e = d; e >= v; --e) acc = acc * zval + to_big(p.coeff(e));
  if (v != 0) acc *= pow(zval, static_cast<int>(v));
  return acc;
}

BigFloat eval_factored_abs(const BigFloat& lead_abs,
                           const std::vector<std::pair<BigComplex, int>>& roots,
                           const BigComplex& zval) {
  BigFloat acc = lead_abs;
  for (const auto& [a, mu] : roots) acc *= pow(abs(zval - a), mu);
  return acc;
}

}  // namespace nsalpha
