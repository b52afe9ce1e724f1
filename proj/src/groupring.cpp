#include "nsalpha/groupring.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace nsalpha {

int VCGroupSpec::inv_q(int a) const {
  for (int b = 0; b < n; ++b)
    if (q_mult[a][b] == 0) return b;
  throw std::invalid_argument("inv_q: no inverse (invalid table)");
}

namespace {

VCGroupSpec cyclic_spec(int n, const std::vector<int>& action) {
  VCGroupSpec s;
  s.n = n;
  s.q_mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.q_mult[a][b] = (a + b) % n;
  s.action = action;
  s.cocycle.assign(n, std::vector<long>(n, 0));
  return s;
}

}  // namespace

VCGroupSpec VCGroupSpec::Z() { return cyclic_spec(1, {1}); }
VCGroupSpec VCGroupSpec::Dinf() { return cyclic_spec(2, {1, -1}); }
VCGroupSpec VCGroupSpec::ZxZ2() { return cyclic_spec(2, {1, 1}); }
VCGroupSpec VCGroupSpec::ZxZ3() { return cyclic_spec(3, {1, 1, 1}); }

VCGroupSpec VCGroupSpec::named(const std::string& name) {
  if (name == "Z") return Z();
  if (name == "Dinf") return Dinf();
  if (name == "ZxZ2") return ZxZ2();
  if (name == "ZxZ3") return ZxZ3();
  throw std::invalid_argument("unknown group spec name: " + name);
}

nlohmann::json VCGroupSpec::to_json() const {
  nlohmann::json qm = nlohmann::json::array();
  for (const auto& row : q_mult) {
    nlohmann::json r = nlohmann::json::array();
    for (int v : row) r.push_back(v + 1);  // 1-based on the wire
    qm.push_back(std::move(r));
  }
  return {{"n", n}, {"q_mult", qm}, {"action", action}, {"cocycle", cocycle}};
}

VCGroupSpec VCGroupSpec::from_json(const nlohmann::json& j) {
  VCGroupSpec s;
  s.n = j.at("n").get<int>();
  if (s.n <= 0) throw std::invalid_argument("group json: n must be positive");
  const auto& qm = j.at("q_mult");
  if (static_cast<int>(qm.size()) != s.n)
    throw std::invalid_argument("group json: q_mult must be n x n");
  s.q_mult.assign(s.n, std::vector<int>(s.n));
  for (int a = 0; a < s.n; ++a) {
    if (static_cast<int>(qm[a].size()) != s.n)
      throw std::invalid_argument("group json: q_mult must be n x n");
    for (int b = 0; b < s.n; ++b) {
      int v = qm[a][b].get<int>();
      if (v < 1 || v > s.n)
        throw std::invalid_argument("group json: q_mult values must lie in 1..n");
      s.q_mult[a][b] = v - 1;
    }
  }
  s.action = j.at("action").get<std::vector<int>>();
  s.cocycle = j.at("cocycle").get<std::vector<std::vector<long>>>();
  require_valid_group(s);
  return s;
}

ValidationReport validate_group(const VCGroupSpec& s) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  const int n = s.n;
  if (static_cast<int>(s.q_mult.size()) != n) {
    fail("q_mult must be n x n");
    return rep;
  }
  for (const auto& row : s.q_mult)
    if (static_cast<int>(row.size()) != n) {
      fail("q_mult must be n x n");
      return rep;
    }
  if (static_cast<int>(s.action.size()) != n) {
    fail("action must have n entries");
    return rep;
  }
  if (static_cast<int>(s.cocycle.size()) != n) {
    fail("cocycle must be n x n");
    return rep;
  }
  for (const auto& row : s.cocycle)
    if (static_cast<int>(row.size()) != n) {
      fail("cocycle must be n x n");
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.q_mult[a][b] < 0 || s.q_mult[a][b] >= n) {
        fail("q_mult values out of range");
        return rep;
      }

  for (int a = 0; a < n; ++a) {
    if (s.q_mult[0][a] != a || s.q_mult[a][0] != a)
      fail("index 0 is not a two-sided identity of Q");
  }
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (s.q_mult[a][b] == 0 && s.q_mult[b][a] == 0) has_inv = true;
    if (!has_inv) {
      std::ostringstream os;
      os << "Q element " << a + 1 << " has no two-sided inverse";
      fail(os.str());
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.q_mult[s.q_mult[a][b]][c] != s.q_mult[a][s.q_mult[b][c]]) {
          fail("Q multiplication is not associative");
          goto assoc_done;
        }
assoc_done:

  for (int a = 0; a < n; ++a)
    if (s.action[a] != 1 && s.action[a] != -1) fail("action values must be +1 or -1");
  if (rep.valid) {
    if (s.action[0] != 1) fail("action must send the identity to +1");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.action[s.q_mult[a][b]] != s.action[a] * s.action[b]) {
          fail("action is not a homomorphism to {+1, -1}");
          goto action_done;
        }
  action_done:
    for (int a = 0; a < n; ++a)
      if (s.cocycle[0][a] != 0 || s.cocycle[a][0] != 0) {
        fail("cocycle must be normalized: c(e, q) = c(q, e) = 0");
        break;
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (s.action[a] * s.cocycle[b][c] + s.cocycle[a][s.q_mult[b][c]] !=
              s.cocycle[a][b] + s.cocycle[s.q_mult[a][b]][c]) {
            fail("cocycle identity violated");
            goto cocycle_done;
          }
  cocycle_done:
    // Spot-check associativity of the element product on a small k window.
    for (long ka = -1; ka <= 1 && rep.valid; ++ka)
      for (long kb = -1; kb <= 1 && rep.valid; ++kb)
        for (long kc = -1; kc <= 1 && rep.valid; ++kc)
          for (int a = 0; a < n && rep.valid; ++a)
            for (int b = 0; b < n && rep.valid; ++b)
              for (int c = 0; c < n && rep.valid; ++c) {
                GroupElement x{ka, a}, y{kb, b}, zz{kc, c};
                GroupElement lhs = group_mul(s, group_mul(s, x, y), zz);
                GroupElement rhs = group_mul(s, x, group_mul(s, y, zz));
                if (!(lhs == rhs)) fail("element product is not associative");
              }
  }
  return rep;
}

void require_valid_group(const VCGroupSpec& spec) {
  ValidationReport rep = validate_group(spec);
  if (rep.valid) return;
  std::ostringstream os;
  os << "invalid group spec:";
  for (const auto& v : rep.violations) os << " " << v << ";";
  throw std::invalid_argument(os.str());
}

GroupElement group_mul(const VCGroupSpec& s, GroupElement a, GroupElement b) {
  return {a.k + s.action[a.q] * b.k + s.cocycle[a.q][b.q], s.q_mult[a.q][b.q]};
}

GroupElement group_inv(const VCGroupSpec& s, GroupElement a) {
  int qi = s.inv_q(a.q);
  return {-s.action[a.q] * (a.k + s.cocycle[a.q][qi]), qi};
}

GaussianRational GroupRingElement::coeff(GroupElement g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void GroupRingElement::set(GroupElement g, GaussianRational c) {
  if (c.is_zero())
    coeffs_.erase(g);
  else
    coeffs_[g] = std::move(c);
}

void GroupRingElement::add(const VCGroupSpec&, GroupElement g, const GaussianRational& c) {
  set(g, coeff(g) + c);
}

GroupRingMatrix::GroupRingMatrix(VCGroupSpec spec, int rows, int cols)
    : spec_(std::move(spec)),
      rows_(rows),
      cols_(cols),
      entries_(static_cast<size_t>(rows) * cols) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("GroupRingMatrix: dimensions must be positive");
}

GroupRingMatrix GroupRingMatrix::from_laurent(const VCGroupSpec& spec,
                                              const LaurentMatrix& A) {
  GroupRingMatrix m(spec, A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      for (const auto& [exp, c] : A.at(i, j).terms()) m.at(i, j).set({exp, 0}, c);
  return m;
}

nlohmann::json GroupRingMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cols_; ++j) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [g, c] : at(i, j).terms())
        terms.push_back({g.k, g.q + 1, c.re.get_num().get_str(), c.re.get_den().get_str(),
                         c.im.get_num().get_str(), c.im.get_den().get_str()});
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", rows_}, {"cols", cols_}, {"entries", rows}};
}

GroupRingMatrix GroupRingMatrix::from_json(VCGroupSpec spec, const nlohmann::json& j) {
  int r = j.at("rows").get<int>();
  int c = j.at("cols").get<int>();
  GroupRingMatrix m(std::move(spec), r, c);
  const auto& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != r)
    throw std::invalid_argument("group matrix json: entries must have `rows` rows");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(e[i].size()) != c)
      throw std::invalid_argument("group matrix json: row length mismatch");
    for (int k = 0; k < c; ++k) {
      for (const auto& term : e[i][k]) {
        if (!term.is_array() || term.size() != 6)
          throw std::invalid_argument(
              "group matrix json: term must be [k, q, re_num, re_den, im_num, im_den]");
        long kk = term[0].get<long>();
        int q = term[1].get<int>();
        if (q < 1 || q > m.spec().n)
          throw std::invalid_argument("group matrix json: q index out of range");
        auto rat = [](const nlohmann::json& num, const nlohmann::json& den) {
          Rational v(num.is_string() ? mpz_class(num.get<std::string>())
                                     : mpz_class(num.get<long>()),
                     den.is_string() ? mpz_class(den.get<std::string>())
                                     : mpz_class(den.get<long>()));
          if (v.get_den() == 0)
            throw std::invalid_argument("group matrix json: zero denominator");
          v.canonicalize();
          return v;
        };
        GaussianRational coeff(rat(term[2], term[3]), rat(term[4], term[5]));
        GroupElement g{kk, q - 1};
        if (!m.at(i, k).coeff(g).is_zero())
          throw std::invalid_argument("group matrix json: duplicate group element in entry");
        m.at(i, k).set(g, coeff);
      }
    }
  }
  return m;
}

LaurentMatrix restrict_to_Z(const GroupRingMatrix& A) {
  const VCGroupSpec& s = A.spec();
  const int n = s.n;
  LaurentMatrix out(A.rows() * n, A.cols() * n);
  for (int p = 0; p < A.rows(); ++p)
    for (int q = 0; q < A.cols(); ++q)
      for (const auto& [g, c] : A.at(p, q).terms())
        for (int u = 0; u < n; ++u) {
          // g_u^-1 (m, e) g_v = g forces v = u * q(g) and determines m.
          int v = s.mul_q(u, g.q);
          GroupElement w = group_mul(s, GroupElement{0, u}, g);
          GroupElement m = group_mul(s, w, group_inv(s, GroupElement{0, v}));
          if (m.q != 0) throw std::logic_error("restrict_to_Z: coset bookkeeping failed");
          LaurentPoly& dst = out.at(p * n + u, q * n + v);
          dst.set(m.k, dst.coeff(m.k) + c);
        }
  return out;
}

GroupRingMatrix dinf_xt() {
  GroupRingMatrix m(VCGroupSpec::Dinf(), 1, 1);
  m.at(0, 0).set({1, 0}, GaussianRational(1L));  // x
  m.at(0, 0).set({0, 1}, GaussianRational(1L));  // t
  return m;
}

}  // namespace nsalpha
