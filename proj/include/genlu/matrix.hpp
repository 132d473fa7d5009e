// Copyright 2026 The genlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrix with 1-based inclusive indexing, and the index maps
// used to describe implicit row and column permutations.

#ifndef GENLU_MATRIX_HPP_
#define GENLU_MATRIX_HPP_

#include <cassert>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "genlu/errors.hpp"
#include "genlu/scalar.hpp"

namespace genlu {

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(Index rows, Index cols)
      : rows_(rows), cols_(cols), entries_(checked_size(rows, cols), T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix zeros(Index rows, Index cols) { return Matrix(rows, cols); }
  static Matrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool square() const { return rows_ == cols_; }

  // 1-based, unchecked in release builds.
  T& operator()(Index i, Index j) {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }
  const T& operator()(Index i, Index j) const {
    assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
    return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }

  // 1-based, throws BoundsError.
  const T& at(Index i, Index j) const;
  T& at(Index i, Index j);

  std::span<const T> row(Index i) const {
    return {entries_.data() + (i - 1) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const T> entries() const { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static std::size_t checked_size(Index rows, Index cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    return static_cast<std::size_t>(rows * cols);
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<T> entries_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(static_cast<Index>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<Index>(rows.begin()->size())) {
  entries_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<Index>(r.size()) != cols_) {
      throw ShapeError("ragged initializer list");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 1; i <= n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
const T& Matrix<T>::at(Index i, Index j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw BoundsError("matrix index out of range");
  }
  return (*this)(i, j);
}

template <class T>
T& Matrix<T>::at(Index i, Index j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw BoundsError("matrix index out of range");
  }
  return (*this)(i, j);
}

// Inclusive 1-based index range. `last == kEnd` stands for the final index of
// whatever dimension the range is applied to; last < first is empty.
struct Range {
  static constexpr Index kEnd = -1;

  Index first = 1;
  Index last = kEnd;

  static constexpr Range all() { return {1, kEnd}; }
  static constexpr Range from(Index first) { return {first, kEnd}; }
  static constexpr Range to(Index last) { return {1, last}; }
};

// A[rows, cols]. Throws BoundsError for ranges outside the matrix.
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, Range rows, Range cols);

// A[i:j, k:l]
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, Index i, Index j, Index k, Index l) {
  return submatrix(a, Range{i, j}, Range{k, l});
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a);

// Throws ShapeError unless a.cols() == b.rows().
template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b);

// Gauss-Jordan inverse. Throws ShapeError (non-square) or
// SingularMatrixError.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, const ScalarField<T>& field = {});

// Largest absolute entry (0 for empty matrices).
template <class T>
double max_abs(const Matrix<T>& a);

template <class T>
bool is_zero_matrix(const Matrix<T>& a, const ZeroTest<T>& zero);

template <class To, class From>
Matrix<To> convert(const Matrix<From>& a) {
  Matrix<To> out(a.rows(), a.cols());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) {
      out(i, j) = convert_scalar<To>(a(i, j));
    }
  }
  return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& a);

// Map from logical index i to physical index i0, both 1-based. Valid maps
// are permutations of 1..size().
class IndexMap {
 public:
  IndexMap() = default;
  explicit IndexMap(Index n);  // identity
  explicit IndexMap(std::vector<Index> images) : images_(std::move(images)) {}

  Index size() const { return static_cast<Index>(images_.size()); }
  Index operator()(Index i) const {
    return images_[static_cast<std::size_t>(i - 1)];
  }
  void swap(Index a, Index b) {
    std::swap(images_[static_cast<std::size_t>(a - 1)],
              images_[static_cast<std::size_t>(b - 1)]);
  }

  bool is_permutation() const;
  bool is_identity() const;
  // Requires is_permutation().
  IndexMap inverse() const;

  const std::vector<Index>& images() const { return images_; }

  friend bool operator==(const IndexMap&, const IndexMap&) = default;

 private:
  std::vector<Index> images_;
};

// (P∘A)[i,:] = A[p(i),:]
template <class T>
Matrix<T> permute_rows(const Matrix<T>& a, const IndexMap& p);
// (A∘Q)[:,j] = A[:,q(j)]
template <class T>
Matrix<T> permute_cols(const Matrix<T>& a, const IndexMap& q);

}  // namespace genlu

#endif  // GENLU_MATRIX_HPP_
