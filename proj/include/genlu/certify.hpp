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

// Independent verification of claimed factorizations.
//
// Nothing here calls into the factorization engine or the rank-analysis
// elimination: ranks are recomputed by enumerating minors (up to 4x4
// operands, exact fields) or by a fraction-free elimination that pivots from
// the last column and last row, so a bug in one path cannot mask itself in
// the other.

#ifndef GENLU_CERTIFY_HPP_
#define GENLU_CERTIFY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genlu/factor.hpp"
#include "genlu/matrix.hpp"
#include "genlu/rank.hpp"

namespace genlu {

// Largest order of a nonzero minor. Exact fields only; cost grows
// combinatorially, intended for operands of at most a few rows/columns.
Index minor_rank(const Matrix<Rational>& a);

// Bareiss elimination, pivoting from the last column leftward and taking the
// last nonzero row in each column.
Index bareiss_rank(const Matrix<Rational>& a);

// Exact: minor_rank when both dimensions are <= 4, bareiss_rank otherwise.
// Float: complete-pivoting elimination with the field's relative tolerance.
template <class T>
Index independent_rank(const Matrix<T>& a, const ScalarField<T>& field = {});

struct Violation {
  std::string check;
  // Entry position (1-based) or index k, whichever applies.
  std::optional<std::pair<Index, Index>> position;
  std::optional<Index> k;
  std::string detail;
};

struct Certificate {
  bool reconstruct_ok = true;
  bool lower_tri_ok = true;
  bool upper_tri_ok = true;
  bool rank_revealing_ok = true;
  bool sparsity_ok = true;
  std::optional<bool> unit_diag_ok;
  // Only set when certifying a claimed non-existence.
  std::optional<bool> witness_ok;
  // ||L U - A||_inf (or of the permuted product for pivoted forms).
  double max_residual = 0.0;
  std::vector<Violation> violations;

  bool passed() const;
};

// Reconstruction, rectangular triangularity, rank == rank(A), the sparsity
// pattern of L and U relative to the index maps, and the independence of
// physical rows/columns mapped into the leading rank block.
template <class T>
Certificate certify_general(const Matrix<T>& a, const Factorization<T>& f,
                            const ScalarField<T>& field = {});

template <class T>
Certificate certify_unit(const Matrix<T>& a, const UnitFactorization<T>& f,
                         const ScalarField<T>& field = {});

enum class PivotKind { kPartial, kFull };

template <class T>
Certificate certify_pivoted(const Matrix<T>& a,
                            const PivotedFactorization<T>& f, PivotKind kind,
                            const ScalarField<T>& field = {});

// Checks that `c` fails at witness_k and holds for every smaller k.
template <class T>
Certificate certify_nonexistence(const Matrix<T>& a, Condition c,
                                 Index witness_k,
                                 const ScalarField<T>& field = {});

}  // namespace genlu

#endif  // GENLU_CERTIFY_HPP_
