#include "nsalpha/ns_exact.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nsalpha/roots.hpp"

namespace nsalpha {

BigFloat UnitCircleRoot::angle() const {
  BigFloat a = atan2(approx.imag(), approx.real()) / (2 * big_pi());
  if (a < 0) a += 1;
  if (a >= 1) a -= 1;
  return a;
}

namespace {

/// Minimal m <= m_max with r^m = 1, certified exactly through a nonconstant
/// gcd with z^m - 1; nullopt when r is not a root of unity of small order.
std::optional<long> root_of_unity_order(const LaurentPoly& squarefree_factor,
                                        const BigComplex& r, long m_max) {
  const BigFloat numeric_tol = BigFloat("1e-30");
  BigComplex w{1, 0};
  for (long m = 1; m <= m_max; ++m) {
    w *= r;
    if (abs(w - BigComplex(1, 0)) >= numeric_tol) continue;
    LaurentPoly zm1 = LaurentPoly::monomial(m) - LaurentPoly(GaussianRational(1L));
    LaurentPoly cert = poly_gcd(squarefree_factor, zm1);
    if (cert.span() > 0 && abs(eval_big(cert, r)) < numeric_tol) return m;
  }
  return std::nullopt;
}

}  // namespace

std::vector<UnitCircleRoot> unit_circle_roots(const LaurentPoly& p, double tol_circle) {
  std::vector<UnitCircleRoot> out;
  if (p.is_zero() || p.is_unit()) return out;
  const long m_max = 2 * p.span() * p.span();
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    LaurentPoly g = poly_gcd(f, reciprocal_conjugate(f));
    if (g.span() == 0) continue;  // no unit-circle roots in this factor
    for (const BigComplex& r : refined_roots(g)) {
      BigFloat dev = abs(abs(r) - 1);
      if (dev > BigFloat(10 * tol_circle)) continue;
      if (dev > BigFloat(tol_circle)) {
        std::ostringstream os;
        os << "unit_circle_roots: root at distance " << to_double(dev)
           << " from the circle falls in the ambiguity band (tol " << tol_circle << ")";
        throw PrecisionError(os.str());
      }
      UnitCircleRoot ucr;
      ucr.approx = r;
      ucr.multiplicity = mult;
      ucr.order = root_of_unity_order(g, r, m_max);
      out.push_back(std::move(ucr));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const UnitCircleRoot& a, const UnitCircleRoot& b) {
              return a.angle() < b.angle();
            });
  return out;
}

double NSValue::value() const {
  return infinity_plus ? std::numeric_limits<double>::infinity() : 1.0 / mu0;
}

std::string NSValue::str() const {
  if (infinity_plus) return "infinity_plus";
  std::ostringstream os;
  os << "1/" << mu0;
  return os.str();
}

nlohmann::json NSValue::to_json() const {
  if (infinity_plus) return {{"type", "infinity_plus"}};
  return {{"type", "finite"}, {"num", 1}, {"den", mu0}};
}

NSValue ns_number(const LaurentPoly& p, double tol_circle) {
  // The zero polynomial presents a pure kernel atom: a gap above zero.
  if (p.is_zero()) return NSValue::inf_plus();
  auto roots = unit_circle_roots(p, tol_circle);
  if (roots.empty()) return NSValue::inf_plus();
  long mu = 0;
  for (const auto& r : roots) mu = std::max(mu, static_cast<long>(r.multiplicity));
  return NSValue::finite(mu);
}

NSValue ns_number_matrix(const LaurentMatrix& A, double tol_circle) {
  if (A.is_zero()) return NSValue::inf_plus();
  return ns_number(last_invariant_factor(A), tol_circle);
}

NSValue ns_number_group(const GroupRingMatrix& A, double tol_circle) {
  require_valid_group(A.spec());
  return ns_number_matrix(restrict_to_Z(A), tol_circle);
}

}  // namespace nsalpha
