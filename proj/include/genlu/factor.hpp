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

// LU factorizations without permutations of A, plus the classical pivoted
// baselines.
//
// lu_general runs Gaussian elimination on A in place of the physical row and
// column order, tracking two index maps (logical -> physical). When the
// pivot of the active Schur complement is zero it may only defer a zero
// Schur column rightward or a zero Schur row downward; any other pivot
// choice would break triangularity of the recovered factors. If the pivot is
// zero while both the active column and row are nonzero, no factorization
// exists.
//
// Factors are stored in physical coordinates, so L = P_r L_B and U = U_B P_c
// come out directly lower and upper triangular with
//   B[i, j] = A[row_map(i), col_map(j)].

#ifndef GENLU_FACTOR_HPP_
#define GENLU_FACTOR_HPP_

#include <variant>

#include "genlu/matrix.hpp"
#include "genlu/rank.hpp"

namespace genlu {

// Rank-revealing A = L U: L is n x rank lower triangular, U is rank x n upper
// triangular.
template <class T>
struct Factorization {
  Matrix<T> L;
  Matrix<T> U;
  Index rank = 0;
  IndexMap row_map;
  IndexMap col_map;
  // Float only: some zero classification fell within the tolerance band.
  bool ambiguous = false;
};

enum class UnitSide { kLower, kUpper };

// Square A = L U with diag(L) = 1 (kLower) or diag(U) = 1 (kUpper). Only
// columns are deferred for kLower and only rows for kUpper, so the other map
// is always the identity.
template <class T>
struct UnitFactorization {
  Matrix<T> L;
  Matrix<T> U;
  UnitSide unit_side = UnitSide::kLower;
  IndexMap row_map;
  IndexMap col_map;
  bool ambiguous = false;
};

// P∘A∘Q = L U where (P∘A∘Q)[i, j] = A[P(i), Q(j)].
template <class T>
struct PivotedFactorization {
  IndexMap P;
  IndexMap Q;
  Matrix<T> L;
  Matrix<T> U;
  Index rank = 0;
};

struct NotFactorizable {
  // Smallest k at which the existence condition fails.
  Index witness_k = 0;
  // Logical elimination step at which the dead end was met.
  Index dead_end_step = 0;
  bool ambiguous = false;
};

template <class T>
using GeneralOutcome = std::variant<Factorization<T>, NotFactorizable>;
template <class T>
using UnitOutcome = std::variant<UnitFactorization<T>, NotFactorizable>;

template <class T>
GeneralOutcome<T> lu_general(const Matrix<T>& a,
                             const ScalarField<T>& field = {});

template <class T>
UnitOutcome<T> lu_unit_lower(const Matrix<T>& a,
                             const ScalarField<T>& field = {});

// lu_unit_lower on A^T, with the factors transposed and swapped.
template <class T>
UnitOutcome<T> lu_unit_upper(const Matrix<T>& a,
                             const ScalarField<T>& field = {});

// P∘A = L U with L unit lower triangular and U upper triangular, both n x n.
// Exact fields take the first nonzero pivot; floats take the largest.
template <class T>
PivotedFactorization<T> lu_partial_pivot(const Matrix<T>& a,
                                         const ScalarField<T>& field = {});

// P∘A∘Q = L U for rectangular A, with L m x r unit lower triangular, U r x n
// upper triangular and r = rank(A). Pivots are the largest-magnitude entry
// of the active Schur complement, first in column-major order on ties.
template <class T>
PivotedFactorization<T> lu_full_pivot(const Matrix<T>& a,
                                      const ScalarField<T>& field = {});

template <class F>
bool succeeded(const std::variant<F, NotFactorizable>& outcome) {
  return std::holds_alternative<F>(outcome);
}

}  // namespace genlu

#endif  // GENLU_FACTOR_HPP_
