#pragma once

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nsalpha/gaussian.hpp"

namespace nsalpha {

/// Laurent polynomial over Q(i): finitely many nonzero coefficients indexed by
/// integer exponents.  The zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(GaussianRational c) { set(0, std::move(c)); }

  static LaurentPoly monomial(long exp, GaussianRational c = GaussianRational(1L)) {
    LaurentPoly p;
    p.set(exp, std::move(c));
    return p;
  }
  static LaurentPoly z() { return monomial(1); }

  /// Ordinary polynomial from ascending coefficients c0 + c1 z + ...
  static LaurentPoly from_coeffs(std::vector<GaussianRational> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  long valuation() const;  // lowest exponent; throws on zero
  long degree() const;     // highest exponent; throws on zero
  /// degree - valuation for nonzero p; the width of the support.
  long span() const { return degree() - valuation(); }

  GaussianRational coeff(long exp) const;
  void set(long exp, GaussianRational c);
  const std::map<long, GaussianRational>& terms() const { return coeffs_; }

  GaussianRational leading() const;   // coefficient at degree()
  GaussianRational trailing() const;  // coefficient at valuation()

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const GaussianRational& c) const;
  LaurentPoly shifted(long k) const;  // multiply by z^k

  /// True iff the polynomial is a unit c*z^k of the Laurent ring.
  bool is_unit() const { return coeffs_.size() == 1; }

  /// p* with coefficient at n equal to conj of coefficient at -n.
  LaurentPoly involution() const;

  /// Monic representative with zero valuation; identity on the zero polynomial.
  /// If unit != nullptr receives the unit u with p = u * result.
  LaurentPoly monic_zero_valuation(LaurentPoly* unit = nullptr) const;

  /// Derivative of the ordinary representative (valuation must be cleared by
  /// the caller when that matters).
  LaurentPoly derivative() const;

  std::string str(const std::string& var = "z") const;

  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  std::map<long, GaussianRational> coeffs_;
};

/// Quotient and remainder of ordinary-polynomial division (both inputs are
/// taken modulo units z^k: valuations are cleared first).  deg r < deg b.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division in the Laurent ring; throws if b does not divide a.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Monic zero-valuation gcd; gcd(p, 0) is the monic normalization of p.
/// Throws std::invalid_argument when both inputs are zero.
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q);

/// Yun squarefree decomposition, multiplicities strictly increasing, factors
/// monic, pairwise coprime and squarefree.  p = unit * prod f_j^{m_j}.
std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& p);

/// Monic-normalizable ordinary polynomial whose roots are 1/conj(a) for the
/// roots a of p.  Involution followed by valuation clearing.
LaurentPoly reciprocal_conjugate(const LaurentPoly& p);

/// Horner evaluation at z != 0 (hardware doubles).
cdouble eval_complex(const LaurentPoly& p, cdouble zval);

}  // namespace nsalpha
