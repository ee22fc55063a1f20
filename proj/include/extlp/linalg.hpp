// Copyright 2026 The extlp Authors
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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "extlp/errors.hpp"
#include "extlp/ext_value.hpp"
#include "extlp/rational.hpp"

namespace extlp {

// Dense row-major matrix. Desk-scale dimensions only.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Rows must all have the same length. With no rows the column count is 0
  // unless given explicitly.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      require_same_size(row.size(), cols_, "Matrix row");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_same_size(rows[i].size(), cols, "Matrix row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExtVector = std::vector<ExtValue>;
using ExtMatrix = Matrix<ExtValue>;
using RatMatrix = Matrix<Rational>;

/// Sum over i of w_i . v_i, using the nonnegative scalar action.
///
/// Addition on extended values is commutative and associative, so the
/// left-to-right evaluation order is not observable.
inline ExtValue dot_weig(std::span<const ExtValue> v, const NonnegVector& w) {
  require_same_size(v.size(), w.size(), "dot_weig");
  ExtValue sum(0);
  for (std::size_t i = 0; i < v.size(); ++i) sum = add(sum, smul_nn(w[i], v[i]));
  return sum;
}

inline ExtVector mul_weig(const ExtMatrix& m, const NonnegVector& w) {
  require_same_size(m.cols(), w.size(), "mul_weig");
  ExtVector out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(dot_weig(m.row(i), w));
  return out;
}

// Pointwise order. Matrices are intentionally not comparable.
inline bool le_vec(const ExtVector& u, const ExtVector& v) {
  require_same_size(u.size(), v.size(), "le_vec");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] <= v[i])) return false;
  }
  return true;
}

// (-A^T)[j][i] = -(A[i][j]).
inline ExtMatrix neg_transpose(const ExtMatrix& m) {
  ExtMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = neg(m(i, j));
  return t;
}

inline ExtMatrix to_ext(const RatMatrix& m) {
  ExtMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ExtValue(m(i, j));
  return out;
}

inline ExtVector to_ext(const RatVector& v) {
  return ExtVector(v.begin(), v.end());
}

inline RatVector mul(const RatMatrix& m, const RatVector& x) {
  require_same_size(m.cols(), x.size(), "mul");
  RatVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

// ---------------------------------------------------------------------------
// Index masks. Rows and columns are never physically deleted from a problem;
// solvers work on the kept indices and re-expand results with zeros.

using IndexMask = std::vector<bool>;  // true = kept

inline std::vector<std::size_t> kept_indices(const IndexMask& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

template <class T>
Matrix<T> restrict_matrix(const Matrix<T>& m, const IndexMask& rows, const IndexMask& cols) {
  require_same_size(rows.size(), m.rows(), "restrict_matrix rows");
  require_same_size(cols.size(), m.cols(), "restrict_matrix cols");
  auto ri = kept_indices(rows);
  auto ci = kept_indices(cols);
  Matrix<T> out(ri.size(), ci.size());
  for (std::size_t a = 0; a < ri.size(); ++a)
    for (std::size_t b = 0; b < ci.size(); ++b) out(a, b) = m(ri[a], ci[b]);
  return out;
}

template <class T>
std::vector<T> restrict_vector(const std::vector<T>& v, const IndexMask& mask) {
  require_same_size(mask.size(), v.size(), "restrict_vector");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (mask[i]) out.push_back(v[i]);
  }
  return out;
}

// Inverse of restrict_vector: kept positions take the values of `v` in
// order, masked positions become zero.
template <class T>
std::vector<T> expand_with_zeros(const std::vector<T>& v, const IndexMask& mask) {
  std::vector<T> out(mask.size(), T(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out[i] = v.at(k++);
  }
  require_same_size(k, v.size(), "expand_with_zeros");
  return out;
}

}  // namespace extlp
