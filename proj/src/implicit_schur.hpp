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

// Elimination workspace shared by the factorization routines. Holds a
// physical copy of A and two index maps; logical coordinates (i, j) of the
// active Schur complement address W[row_map(i), col_map(j)], so swapping
// logical rows or columns never moves data.

#ifndef GENLU_SRC_IMPLICIT_SCHUR_HPP_
#define GENLU_SRC_IMPLICIT_SCHUR_HPP_

#include <optional>
#include <utility>

#include "genlu/matrix.hpp"

namespace genlu::internal {

template <class T>
class ImplicitSchur {
 public:
  ImplicitSchur(const Matrix<T>& a, const ScalarField<T>& field);

  Index rows() const { return work_.rows(); }
  Index cols() const { return work_.cols(); }
  // Current logical step, 1-based. Rows and columns step()..end are active.
  Index step() const { return step_; }
  bool done() const { return step_ > rows() || step_ > cols(); }

  // Resolves the zero threshold for the active block. Call once per step
  // before any classification.
  void begin_step();

  const T& at(Index i, Index j) const { return work_(row_map_(i), col_map_(j)); }
  bool is_zero(const T& x);
  bool pivot_is_zero() { return is_zero(at(step_, step_)); }

  // Whether the active part (logical rows/cols >= step()) is zero.
  bool column_is_zero(Index j);
  bool row_is_zero(Index i);
  bool active_is_zero();

  // Smallest logical index >= step() + 1 with a nonzero active entry.
  std::optional<Index> first_nonzero_in_row(Index i);
  std::optional<Index> first_nonzero_in_col(Index j);
  // Smallest logical column >= step() whose active part is nonzero.
  std::optional<Index> first_nonzero_column();
  // Largest-magnitude active entry (first in column-major order on ties), or
  // nullopt if every active entry is zero.
  std::optional<std::pair<Index, Index>> largest_active_entry();

  void swap_rows(Index a, Index b) { row_map_.swap(a, b); }
  void swap_cols(Index a, Index b) { col_map_.swap(a, b); }
  // Writes exact zeros into the active part of a logical column / row.
  void clear_column(Index j);
  void clear_row(Index i);

  // Eliminates with the (nonzero) pivot at (step, step): L column gets the
  // multipliers with a unit diagonal, U row gets the pivot row. Advances.
  void eliminate();
  // L column = e_step, U row = active pivot row, Schur unchanged. Advances.
  // Only valid when the active pivot column is zero.
  void unit_step();

  const IndexMap& row_map() const { return row_map_; }
  const IndexMap& col_map() const { return col_map_; }
  bool ambiguous() const { return ambiguous_; }

  // Factors with physical rows of L and physical columns of U.
  Matrix<T> physical_L(Index r) const;
  Matrix<T> physical_U(Index r) const;
  // Factors with logical rows of L and logical columns of U.
  Matrix<T> logical_L(Index r) const;
  Matrix<T> logical_U(Index r) const;

 private:
  Matrix<T> work_;
  Matrix<T> L_;  // physical row x step
  Matrix<T> U_;  // step x physical column
  IndexMap row_map_;
  IndexMap col_map_;
  ScalarField<T> field_;
  double operand_scale_;
  ZeroTest<T> zero_;
  Index step_ = 1;
  bool ambiguous_ = false;
};

}  // namespace genlu::internal

#endif  // GENLU_SRC_IMPLICIT_SCHUR_HPP_
