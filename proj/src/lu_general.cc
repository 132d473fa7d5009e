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

#include <string>

#include "genlu/factor.hpp"
#include "implicit_schur.hpp"

namespace genlu {

namespace {

template <class T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.square() || a.rows() == 0) {
    throw ShapeError(std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + ", expected non-empty square");
  }
}

// The dead end is detected during elimination; the witness is then located
// by scanning the nullity condition directly. Float ranks can disagree with
// the elimination, in which case the dead-end step stands in and the result
// is marked ambiguous.
template <class T>
NotFactorizable dead_end(const Matrix<T>& a, Condition c, Index step,
                         bool ambiguous, const ScalarField<T>& field) {
  NotFactorizable nf;
  nf.dead_end_step = step;
  nf.ambiguous = ambiguous;
  if (auto k = first_violation(a, c, field)) {
    nf.witness_k = *k;
  } else {
    nf.witness_k = step;
    nf.ambiguous = true;
  }
  return nf;
}

}  // namespace

template <class T>
GeneralOutcome<T> lu_general(const Matrix<T>& a, const ScalarField<T>& field) {
  require_square(a, "lu_general");
  internal::ImplicitSchur<T> s(a, field);
  while (!s.done()) {
    s.begin_step();
    const Index t = s.step();
    if (s.pivot_is_zero()) {
      const bool col_zero = s.column_is_zero(t);
      const bool row_zero = s.row_is_zero(t);
      if (!col_zero && !row_zero) {
        return dead_end(a, Condition::kGeneral, t, s.ambiguous(), field);
      }
      if (col_zero && !row_zero) {
        // Zero column: bring in the first nonzero entry of the pivot row and
        // defer the zero column rightward.
        s.clear_column(t);
        s.swap_cols(t, *s.first_nonzero_in_row(t));
      } else if (row_zero && !col_zero) {
        s.clear_row(t);
        s.swap_rows(t, *s.first_nonzero_in_col(t));
      } else {
        s.clear_column(t);
        s.clear_row(t);
        const auto j = s.first_nonzero_column();
        if (!j) break;  // Schur complement is zero: rank reached.
        s.swap_cols(t, *j);
        // Row t is zero, so the pivot is still zero; the column is not.
        s.swap_rows(t, *s.first_nonzero_in_col(t));
      }
    }
    s.eliminate();
  }

  const Index r = s.step() - 1;
  Factorization<T> f;
  f.L = s.physical_L(r);
  f.U = s.physical_U(r);
  f.rank = r;
  f.row_map = s.row_map();
  f.col_map = s.col_map();
  f.ambiguous = s.ambiguous();
  return f;
}

template GeneralOutcome<Rational> lu_general(const Matrix<Rational>&,
                                             const ScalarField<Rational>&);
template GeneralOutcome<double> lu_general(const Matrix<double>&,
                                           const ScalarField<double>&);

}  // namespace genlu
