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

#include "implicit_schur.hpp"

#include <algorithm>

namespace genlu::internal {

template <class T>
ImplicitSchur<T>::ImplicitSchur(const Matrix<T>& a, const ScalarField<T>& field)
    : work_(a),
      L_(a.rows(), std::min(a.rows(), a.cols())),
      U_(std::min(a.rows(), a.cols()), a.cols()),
      row_map_(a.rows()),
      col_map_(a.cols()),
      field_(field),
      operand_scale_(kIsExact<T> ? 0.0 : max_abs(a)),
      zero_(make_zero_test(field, operand_scale_)) {}

template <class T>
void ImplicitSchur<T>::begin_step() {
  if constexpr (!kIsExact<T>) {
    // Threshold follows the active block, floored at the operand's own scale
    // so cancellation noise in a vanishing Schur complement reads as zero.
    double active = 0.0;
    for (Index i = step_; i <= rows(); ++i) {
      for (Index j = step_; j <= cols(); ++j) {
        active = std::max(active, magnitude(at(i, j)));
      }
    }
    zero_ = make_zero_test(field_, std::max(active, operand_scale_));
  }
}

template <class T>
bool ImplicitSchur<T>::is_zero(const T& x) {
  if constexpr (!kIsExact<T>) {
    if (zero_.ambiguous(x)) ambiguous_ = true;
  }
  return zero_(x);
}

template <class T>
bool ImplicitSchur<T>::column_is_zero(Index j) {
  bool all_zero = true;
  for (Index i = step_; i <= rows(); ++i) all_zero = is_zero(at(i, j)) && all_zero;
  return all_zero;
}

template <class T>
bool ImplicitSchur<T>::row_is_zero(Index i) {
  bool all_zero = true;
  for (Index j = step_; j <= cols(); ++j) all_zero = is_zero(at(i, j)) && all_zero;
  return all_zero;
}

template <class T>
bool ImplicitSchur<T>::active_is_zero() {
  for (Index j = step_; j <= cols(); ++j) {
    if (!column_is_zero(j)) return false;
  }
  return true;
}

template <class T>
std::optional<Index> ImplicitSchur<T>::first_nonzero_in_row(Index i) {
  for (Index j = step_ + 1; j <= cols(); ++j) {
    if (!is_zero(at(i, j))) return j;
  }
  return std::nullopt;
}

template <class T>
std::optional<Index> ImplicitSchur<T>::first_nonzero_in_col(Index j) {
  for (Index i = step_ + 1; i <= rows(); ++i) {
    if (!is_zero(at(i, j))) return i;
  }
  return std::nullopt;
}

template <class T>
std::optional<Index> ImplicitSchur<T>::first_nonzero_column() {
  for (Index j = step_; j <= cols(); ++j) {
    if (!column_is_zero(j)) return j;
  }
  return std::nullopt;
}

template <class T>
std::optional<std::pair<Index, Index>> ImplicitSchur<T>::largest_active_entry() {
  std::optional<std::pair<Index, Index>> best;
  double best_mag = 0.0;
  for (Index j = step_; j <= cols(); ++j) {
    for (Index i = step_; i <= rows(); ++i) {
      const T& x = at(i, j);
      if (is_zero(x)) continue;
      if constexpr (kIsExact<T>) {
        if (!best || abs(x) > abs(at(best->first, best->second))) best = {i, j};
      } else {
        if (!best || magnitude(x) > best_mag) {
          best = {i, j};
          best_mag = magnitude(x);
        }
      }
    }
  }
  return best;
}

template <class T>
void ImplicitSchur<T>::clear_column(Index j) {
  for (Index i = step_; i <= rows(); ++i) work_(row_map_(i), col_map_(j)) = T(0);
}

template <class T>
void ImplicitSchur<T>::clear_row(Index i) {
  for (Index j = step_; j <= cols(); ++j) work_(row_map_(i), col_map_(j)) = T(0);
}

template <class T>
void ImplicitSchur<T>::eliminate() {
  const Index t = step_;
  const Index pr = row_map_(t);
  const Index pc = col_map_(t);
  const T pivot = work_(pr, pc);

  L_(pr, t) = T(1);
  for (Index i = t + 1; i <= rows(); ++i) {
    const Index r = row_map_(i);
    L_(r, t) = work_(r, pc) / pivot;
  }
  for (Index j = t; j <= cols(); ++j) {
    const Index c = col_map_(j);
    U_(t, c) = work_(pr, c);
  }
  for (Index i = t + 1; i <= rows(); ++i) {
    const Index r = row_map_(i);
    const T& f = L_(r, t);
    if (f == 0) continue;
    for (Index j = t + 1; j <= cols(); ++j) {
      const Index c = col_map_(j);
      work_(r, c) -= f * U_(t, c);
    }
    work_(r, pc) = T(0);
  }
  ++step_;
}

template <class T>
void ImplicitSchur<T>::unit_step() {
  const Index t = step_;
  const Index pr = row_map_(t);
  L_(pr, t) = T(1);
  for (Index j = t; j <= cols(); ++j) {
    const Index c = col_map_(j);
    U_(t, c) = work_(pr, c);
  }
  ++step_;
}

template <class T>
Matrix<T> ImplicitSchur<T>::physical_L(Index r) const {
  return submatrix(L_, Range::all(), Range::to(r));
}

template <class T>
Matrix<T> ImplicitSchur<T>::physical_U(Index r) const {
  return submatrix(U_, Range::to(r), Range::all());
}

template <class T>
Matrix<T> ImplicitSchur<T>::logical_L(Index r) const {
  return permute_rows(physical_L(r), row_map_);
}

template <class T>
Matrix<T> ImplicitSchur<T>::logical_U(Index r) const {
  return permute_cols(physical_U(r), col_map_);
}

template class ImplicitSchur<Rational>;
template class ImplicitSchur<double>;

}  // namespace genlu::internal
