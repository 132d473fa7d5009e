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

// Rank, nullity and the nullity conditions that decide whether a square
// matrix has an LU factorization without permutations.
//
// For each k = 1..n three nullities are compared:
//   null_principal  = null(A[1:k,1:k])
//   null_col_block  = null(A[:,1:k])
//   null_row_block  = null(A[1:k,:]^T)
// A general LU factorization exists iff
//   null_principal <= null_col_block + null_row_block   for every k,
// one with unit lower triangular L iff null_principal == null_col_block, and
// one with unit upper triangular U iff null_principal == null_row_block.
//
// Over doubles ranks depend on the zero tolerance, so Float reports are
// advisory; the exact rational backend is the reference.

#ifndef GENLU_RANK_HPP_
#define GENLU_RANK_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "genlu/matrix.hpp"

namespace genlu {

// Number of pivots of a row-echelon reduction. Exact fields take the first
// nonzero entry of each column as pivot; floats take the largest magnitude
// and treat entries at or below relative_tolerance * max_abs(a) as zero.
template <class T>
Index rank(const Matrix<T>& a, const ScalarField<T>& field = {});

// cols - rank
template <class T>
Index nullity(const Matrix<T>& a, const ScalarField<T>& field = {});

enum class Condition { kGeneral, kUnitLower, kUnitUpper };

std::string_view condition_name(Condition c);

struct NullityRecord {
  Index k = 0;
  Index null_principal = 0;
  Index null_col_block = 0;
  Index null_row_block = 0;
  bool general_ok = false;
  bool unit_lower_ok = false;
  bool unit_upper_ok = false;

  bool ok(Condition c) const;
  friend bool operator==(const NullityRecord&, const NullityRecord&) = default;
};

struct ExistenceReport {
  Index n = 0;
  std::vector<NullityRecord> per_k;
  bool general_exists = false;
  bool unit_lower_exists = false;
  bool unit_upper_exists = false;
  // Relative tolerance used for Float reports; empty for exact ones.
  std::optional<double> relative_tolerance;

  bool exists(Condition c) const;
  // Smallest k whose record fails `c`.
  std::optional<Index> witness(Condition c) const;
};

// The three nullities at one k, each by an independent elimination.
template <class T>
NullityRecord nullity_record(const Matrix<T>& a, Index k,
                             const ScalarField<T>& field = {});

// Throws ShapeError for non-square or empty input.
template <class T>
ExistenceReport existence_report(const Matrix<T>& a,
                                 const ScalarField<T>& field = {});

// Smallest k at which `c` fails, scanning upward and stopping at the first
// failure. Throws ShapeError for non-square input.
template <class T>
std::optional<Index> first_violation(const Matrix<T>& a, Condition c,
                                     const ScalarField<T>& field = {});

// null(B*C) <= null(B) + null(C). Always true; kept as a test utility.
// Throws ShapeError unless B and C are square of the same size.
template <class T>
bool sylvester_nullity_check(const Matrix<T>& b, const Matrix<T>& c,
                             const ScalarField<T>& field = {});

}  // namespace genlu

#endif  // GENLU_RANK_HPP_
