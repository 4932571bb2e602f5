// Copyright 2026 The agshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense matrices over a GaloisField and exact Gaussian elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "agshare/errors.hpp"
#include "agshare/field.hpp"

namespace agshare {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const {
    std::vector<Elem> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Matrix built from the given columns, in order.
  Matrix select_columns(std::span<const std::size_t> cols) const {
    Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

inline Matrix multiply(const GaloisField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not match");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = F.add(acc, F.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

/// u * M for a row vector u.
inline std::vector<Elem> row_times(const GaloisField& F, std::span<const Elem> u, const Matrix& m) {
  if (u.size() != m.rows()) throw InvalidArgument("vector length does not match matrix rows");
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (u[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = F.add(out[c], F.mul(u[r], m(r, c)));
  }
  return out;
}

struct RowEchelon {
  Matrix reduced;
  /// Pivot column of each nonzero row, increasing.
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Columns are scanned left to right and the first
/// row at or below the current one with a nonzero entry becomes the pivot.
inline RowEchelon rref(const GaloisField& F, Matrix m) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    const Elem scale = F.inv(m(lead, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead, j) = F.mul(m(lead, j), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Elem factor = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F.sub(m(r, j), F.mul(factor, m(lead, j)));
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const GaloisField& F, const Matrix& m) { return rref(F, m).pivots.size(); }

/// Basis (as rows) of { v : m v = 0 }. One basis vector per free column, with
/// a 1 in that column; ordered by free column.
inline Matrix null_space(const GaloisField& F, const Matrix& m) {
  const RowEchelon e = rref(F, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix out(free.size(), m.cols());
  for (std::size_t i = 0; i < free.size(); ++i) {
    out(i, free[i]) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out(i, e.pivots[r]) = F.neg(e.reduced(r, free[i]));
  }
  return out;
}

/// Solves a x = b. Free variables are set to zero; returns nullopt if inconsistent.
inline std::optional<std::vector<Elem>> solve(const GaloisField& F, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length does not match");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(F, std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Elem> x(a.cols(), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

/// True iff v is a linear combination of the rows of m.
inline bool in_row_space(const GaloisField& F, const Matrix& m, std::span<const Elem> v) {
  return solve(F, m.transpose(), v).has_value();
}

}  // namespace agshare
