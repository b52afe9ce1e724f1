#include "nsalpha/laurent_matrix.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace nsalpha {

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(GaussianRational(1L));
  return m;
}

bool LaurentMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  LaurentMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  LaurentMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

LaurentMatrix LaurentMatrix::adjoint() const {
  LaurentMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involution();
  return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

void LaurentMatrix::swap_rows(int a, int b) {
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void LaurentMatrix::swap_cols(int a, int b) {
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void LaurentMatrix::add_row_multiple(int a, int b, const LaurentPoly& f) {
  for (int j = 0; j < cols_; ++j) at(a, j) += f * at(b, j);
}

void LaurentMatrix::add_col_multiple(int a, int b, const LaurentPoly& f) {
  for (int i = 0; i < rows_; ++i) at(i, a) += f * at(i, b);
}

void LaurentMatrix::scale_row(int r, const LaurentPoly& u) {
  for (int j = 0; j < cols_; ++j) at(r, j) = u * at(r, j);
}

void LaurentMatrix::scale_col(int c, const LaurentPoly& u) {
  for (int i = 0; i < rows_; ++i) at(i, c) = u * at(i, c);
}

LaurentPoly LaurentMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square matrix required");
  if (rows_ == 1) return at(0, 0);
  LaurentPoly acc;
  for (int j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    LaurentMatrix minor(rows_ - 1, cols_ - 1);
    for (int i = 1; i < rows_; ++i) {
      int cc = 0;
      for (int c = 0; c < cols_; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = at(i, c);
      }
    }
    LaurentPoly term = at(0, j) * minor.det();
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[ ";
    for (int j = 0; j < cols_; ++j) {
      os << at(i, j).str();
      if (j + 1 < cols_) os << ", ";
    }
    os << " ]\n";
  }
  return os.str();
}

nlohmann::json LaurentMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).to_json());
    rows.push_back(std::move(row));
  }
  return {{"rows", rows_}, {"cols", cols_}, {"entries", rows}};
}

LaurentMatrix LaurentMatrix::from_json(const nlohmann::json& j) {
  int r = j.at("rows").get<int>();
  int c = j.at("cols").get<int>();
  LaurentMatrix m(r, c);
  const auto& e = j.at("entries");
  if (!e.is_array() || static_cast<int>(e.size()) != r)
    throw std::invalid_argument("matrix json: entries must have `rows` rows");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(e[i].size()) != c)
      throw std::invalid_argument("matrix json: row length mismatch");
    for (int k = 0; k < c; ++k) m.at(i, k) = LaurentPoly::from_json(e[i][k]);
  }
  return m;
}

}  // namespace nsalpha
