#include "nsalpha/laurent.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nsalpha {

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string GaussianRational::str() const {
  if (im == 0) return rational_str(re);
  if (re == 0) return rational_str(im) + "i";
  std::string s = rational_str(re);
  if (im > 0) s += "+";
  return s + rational_str(im) + "i";
}

LaurentPoly LaurentPoly::from_coeffs(std::vector<GaussianRational> ascending) {
  LaurentPoly p;
  for (size_t j = 0; j < ascending.size(); ++j)
    p.set(static_cast<long>(j), std::move(ascending[j]));
  return p;
}

long LaurentPoly::valuation() const {
  if (is_zero()) throw std::invalid_argument("valuation of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::degree() const {
  if (is_zero()) throw std::invalid_argument("degree of zero polynomial");
  return coeffs_.rbegin()->first;
}

GaussianRational LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void LaurentPoly::set(long exp, GaussianRational c) {
  if (c.is_zero())
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

GaussianRational LaurentPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading of zero polynomial");
  return coeffs_.rbegin()->second;
}

GaussianRational LaurentPoly::trailing() const {
  if (is_zero()) throw std::invalid_argument("trailing of zero polynomial");
  return coeffs_.begin()->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_[e] = c * v;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, v] : coeffs_) r.coeffs_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::involution() const {
  LaurentPoly r;
  for (const auto& [e, v] : coeffs_) r.coeffs_[-e] = v.conj();
  return r;
}

LaurentPoly LaurentPoly::monic_zero_valuation(LaurentPoly* unit) const {
  if (is_zero()) {
    if (unit) *unit = LaurentPoly(GaussianRational(1L));
    return *this;
  }
  long v = valuation();
  GaussianRational lead = leading();
  if (unit) *unit = LaurentPoly::monomial(v, lead);
  return shifted(-v).scaled(lead.inverse());
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, v] : coeffs_)
    if (e != 0) r.set(e - 1, GaussianRational(Rational(e)) * v);
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = !first && cs.size() && cs[0] == '-' && c.is_real();
    if (!first) out += neg ? " - " : " + ";
    if (neg) cs = cs.substr(1);
    bool needs_coeff = (e == 0) || !(c == GaussianRational(1L) || (neg && cs == "1"));
    if (needs_coeff) {
      if (!c.is_real() && c.re != 0) out += "(" + cs + ")";
      else out += cs;
    }
    if (e != 0) {
      if (needs_coeff) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    first = false;
  }
  return out;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  LaurentPoly r = a.is_zero() ? a : a.shifted(-a.valuation());
  LaurentPoly d = b.shifted(-b.valuation());
  LaurentPoly q;
  const long db = d.degree();
  const GaussianRational inv_lead = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    GaussianRational f = r.leading() * inv_lead;
    long sh = r.degree() - db;
    q.set(sh, q.coeff(sh) + f);
    r -= d.shifted(sh).scaled(f);
  }
  return {q, r};
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return a;
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::invalid_argument("poly_div_exact: not divisible");
  // restore the unit z^k lost by clearing valuations
  return q.shifted(a.valuation() - b.valuation());
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (a.is_zero()) return !b.is_zero();
  if (b.is_zero()) return false;
  return poly_divmod(a, b).second.is_zero();
}

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("poly_gcd: both arguments zero");
  LaurentPoly a = p.monic_zero_valuation();
  LaurentPoly b = q.monic_zero_valuation();
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = b;
    b = r.monic_zero_valuation();
  }
  return a.monic_zero_valuation();
}

std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<LaurentPoly, int>> out;
  LaurentPoly f = p.monic_zero_valuation();
  if (f.degree() == 0) return out;
  // Yun's algorithm (characteristic zero)
  LaurentPoly df = f.derivative();
  LaurentPoly a = poly_gcd(f, df);
  LaurentPoly b = poly_div_exact(f, a);
  LaurentPoly c = poly_div_exact(df, a);
  LaurentPoly d = c - b.derivative();
  int mult = 1;
  while (!(b.degree() == 0)) {
    LaurentPoly g = d.is_zero() ? b.monic_zero_valuation() : poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, mult);
    b = poly_div_exact(b, g);
    c = poly_div_exact(d, g);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

LaurentPoly reciprocal_conjugate(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("reciprocal_conjugate: zero polynomial");
  LaurentPoly q = p.involution();
  return q.shifted(-q.valuation());
}

cdouble eval_complex(const LaurentPoly& p, cdouble zval) {
  if (zval == cdouble(0.0, 0.0))
    throw std::invalid_argument("eval_complex: z = 0");
  if (p.is_zero()) return {0.0, 0.0};
  // Horner on the ordinary representative, then multiply by z^valuation.
  long v = p.valuation();
  long d = p.degree();
  cdouble acc{0.0, 0.0};
  for (long e = d; e >= v; --e) acc = acc * zval + p.coeff(e).to_complex();
  return acc * std::pow(zval, static_cast<double>(v));
}

nlohmann::json LaurentPoly::to_json() const {
  auto num = [](const mpz_class& z) -> nlohmann::json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : coeffs_)
    terms.push_back({e, num(c.re.get_num()), num(c.re.get_den()), num(c.im.get_num()),
                     num(c.im.get_den())});
  return terms;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("laurent json: expected array of terms");
  auto big = [](const nlohmann::json& v) -> mpz_class {
    if (v.is_string()) return mpz_class(v.get<std::string>());
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    throw std::invalid_argument("laurent json: integer or string expected");
  };
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5)
      throw std::invalid_argument("laurent json: term must be [exp, re_n, re_d, im_n, im_d]");
    long e = t[0].get<long>();
    mpz_class rn = big(t[1]), rd = big(t[2]), in = big(t[3]), id = big(t[4]);
    if (rd <= 0 || id <= 0)
      throw std::invalid_argument("laurent json: denominators must be positive");
    if (!p.coeff(e).is_zero())
      throw std::invalid_argument("laurent json: duplicate exponent");
    mpz_class g1, g2;
    mpz_gcd(g1.get_mpz_t(), rn.get_mpz_t(), rd.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), in.get_mpz_t(), id.get_mpz_t());
    if (g1 != 1 || g2 != 1)
      throw std::invalid_argument("laurent json: fractions must be reduced");
    Rational re(rn, rd), im(in, id);
    re.canonicalize();
    im.canonicalize();
    p.set(e, GaussianRational(re, im));
  }
  return p;
}

}  // namespace nsalpha
