#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nsalpha/laurent.hpp"

namespace nsalpha {

/// Dense r x s matrix over the Laurent ring Q(i)[z, z^-1].
class LaurentMatrix {
 public:
  LaurentMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
      throw std::invalid_argument("LaurentMatrix: dimensions must be positive");
  }

  static LaurentMatrix scalar(LaurentPoly p) {
    LaurentMatrix m(1, 1);
    m.at(0, 0) = std::move(p);
    return m;
  }
  static LaurentMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentPoly& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const LaurentPoly& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  bool is_zero() const;

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  LaurentMatrix operator-(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const;

  /// Entrywise involution plus transpose: A*.
  LaurentMatrix adjoint() const;
  LaurentMatrix transpose() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[a] += f * row[b]
  void add_row_multiple(int a, int b, const LaurentPoly& f);
  void add_col_multiple(int a, int b, const LaurentPoly& f);
  void scale_row(int r, const LaurentPoly& u);
  void scale_col(int c, const LaurentPoly& u);

  /// Exact determinant by cofactor expansion (square matrices; small sizes).
  LaurentPoly det() const;

  std::string str() const;

  nlohmann::json to_json() const;
  static LaurentMatrix from_json(const nlohmann::json& j);

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace nsalpha
