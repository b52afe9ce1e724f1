#include "nsalpha/smith.hpp"

#include <algorithm>

namespace nsalpha {

namespace {

/// Inverse of a Laurent-ring unit c*z^k.
LaurentPoly unit_inverse(const LaurentPoly& u) {
  if (!u.is_unit()) throw std::invalid_argument("unit_inverse: not a unit");
  return LaurentPoly::monomial(-u.degree(), u.leading().inverse());
}

void fold_content(mpz_class& num_gcd, mpz_class& den_lcm, const Rational& q) {
  if (q == 0) return;
  mpz_class n = abs(q.get_num());
  mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
}

/// Positive rational c with (1/c) * row having coprime integer coefficients;
/// 0 for an all-zero row.
Rational row_content(const LaurentMatrix& M, int row, int cols) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (int j = 0; j < cols; ++j)
    for (const auto& [exp, c] : M.at(row, j).terms()) {
      (void)exp;
      fold_content(num_gcd, den_lcm, c.re);
      fold_content(num_gcd, den_lcm, c.im);
    }
  if (num_gcd == 0) return Rational(0);
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

/// f with a - f*pivot having a strictly narrower support than pivot (or zero)
/// in column position terms: a = f*pivot + z^val(a) * remainder.
LaurentPoly reduction_quotient(const LaurentPoly& a, const LaurentPoly& pivot) {
  auto [q, rem] = poly_divmod(a, pivot);
  (void)rem;
  return q.shifted(a.valuation() - pivot.valuation());
}

}  // namespace

SNFResult smith_normal_form(const LaurentMatrix& A) {
  const int r = A.rows(), s = A.cols();
  LaurentMatrix M = A;
  SNFResult out{LaurentMatrix::identity(r), LaurentMatrix::identity(s), {}, 0,
                LaurentPoly(GaussianRational(1L)), LaurentPoly(GaussianRational(1L))};
  LaurentMatrix& S = out.S;
  LaurentMatrix& T = out.T;
  const LaurentPoly one(GaussianRational(1L));

  int t = 0;
  const int bound = std::min(r, s);
  while (t < bound) {
    // Keep coefficients small: divide each active row by its rational content.
    for (int i = t; i < r; ++i) {
      Rational c = row_content(M, i, s);
      if (c != 0 && c != 1) {
        LaurentPoly u(GaussianRational(Rational(1) / c));
        M.scale_row(i, u);
        S.scale_row(i, u);
        out.det_S *= u;
      }
    }

    // Pivot: narrowest support, ties broken by position.
    int pi = -1, pj = -1;
    long best = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < s; ++j) {
        if (M.at(i, j).is_zero()) continue;
        long sp = M.at(i, j).span();
        if (best < 0 || sp < best) {
          best = sp;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // active submatrix is zero
    if (pi != t) {
      M.swap_rows(t, pi);
      S.swap_rows(t, pi);
      out.det_S = -out.det_S;
    }
    if (pj != t) {
      M.swap_cols(t, pj);
      T.swap_cols(t, pj);
      out.det_T = -out.det_T;
    }

    while (true) {
      bool restart = false;
      for (int i = t + 1; i < r && !restart; ++i) {
        if (M.at(i, t).is_zero()) continue;
        LaurentPoly f = -reduction_quotient(M.at(i, t), M.at(t, t));
        M.add_row_multiple(i, t, f);
        S.add_row_multiple(i, t, f);
        if (!M.at(i, t).is_zero()) {  // remainder is a narrower pivot
          M.swap_rows(t, i);
          S.swap_rows(t, i);
          out.det_S = -out.det_S;
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < s && !restart; ++j) {
        if (M.at(t, j).is_zero()) continue;
        LaurentPoly f = -reduction_quotient(M.at(t, j), M.at(t, t));
        M.add_col_multiple(j, t, f);
        T.add_col_multiple(j, t, f);
        if (!M.at(t, j).is_zero()) {
          M.swap_cols(t, j);
          T.swap_cols(t, j);
          out.det_T = -out.det_T;
          restart = true;
        }
      }
      if (restart) continue;

      // Pivot row and column are clear; enforce that the pivot divides the
      // rest of the active submatrix.
      bool fixed = false;
      for (int i = t + 1; i < r && !fixed; ++i)
        for (int j = t + 1; j < s && !fixed; ++j)
          if (!divides(M.at(t, t), M.at(i, j))) {
            M.add_row_multiple(t, i, one);
            S.add_row_multiple(t, i, one);
            fixed = true;
          }
      if (!fixed) break;
    }

    LaurentPoly unit;
    LaurentPoly monic = M.at(t, t).monic_zero_valuation(&unit);
    LaurentPoly u_inv = unit_inverse(unit);
    M.scale_row(t, u_inv);
    S.scale_row(t, u_inv);
    out.det_S *= u_inv;
    if (M.at(t, t) != monic) throw std::logic_error("smith: pivot normalization failed");
    ++t;
  }

  out.rank = t;
  for (int l = 0; l < t; ++l) out.factors.push_back(M.at(l, l));
  for (int l = 0; l + 1 < t; ++l)
    if (!divides(out.factors[l], out.factors[l + 1]))
      throw std::logic_error("smith: divisibility chain violated");
  if (!out.det_S.is_unit() || !out.det_T.is_unit())
    throw std::logic_error("smith: transformation determinant is not a unit");

  LaurentMatrix D(r, s);
  for (int l = 0; l < t; ++l) D.at(l, l) = out.factors[l];
  if (!(S * A * T == D)) throw std::logic_error("smith: S*A*T verification failed");
  return out;
}

std::vector<LaurentPoly> determinantal_divisors(const LaurentMatrix& A) {
  const int r = A.rows(), s = A.cols();
  if (r > 5 || s > 5)
    throw ResourceError("determinantal_divisors: minor enumeration capped at 5x5");
  std::vector<LaurentPoly> out;
  const int bound = std::min(r, s);
  for (int l = 1; l <= bound; ++l) {
    LaurentPoly g;  // gcd of all l x l minors, accumulated
    std::vector<int> ri(l), ci(l);
    for (int k = 0; k < l; ++k) ri[k] = k;
    bool more_rows = true;
    while (more_rows) {
      for (int k = 0; k < l; ++k) ci[k] = k;
      bool more_cols = true;
      while (more_cols) {
        LaurentMatrix sub(l, l);
        for (int a = 0; a < l; ++a)
          for (int b = 0; b < l; ++b) sub.at(a, b) = A.at(ri[a], ci[b]);
        LaurentPoly m = sub.det();
        if (!m.is_zero()) g = g.is_zero() ? m.monic_zero_valuation() : poly_gcd(g, m);
        // next column combination
        int k = l - 1;
        while (k >= 0 && ci[k] == s - l + k) --k;
        if (k < 0)
          more_cols = false;
        else {
          ++ci[k];
          for (int b = k + 1; b < l; ++b) ci[b] = ci[b - 1] + 1;
        }
      }
      int k = l - 1;
      while (k >= 0 && ri[k] == r - l + k) --k;
      if (k < 0)
        more_rows = false;
      else {
        ++ri[k];
        for (int a = k + 1; a < l; ++a) ri[a] = ri[a - 1] + 1;
      }
    }
    if (g.is_zero()) break;  // rank reached: d_l = 0 from here on
    out.push_back(g);
  }
  return out;
}

LaurentPoly last_invariant_factor(const LaurentMatrix& A) {
  if (A.is_zero()) throw std::invalid_argument("last_invariant_factor: zero matrix");
  return smith_normal_form(A).factors.back();
}

}  // namespace nsalpha
