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
                     "x" + std::to_string(a.cols()) + ", expected square");
  }
}

}  // namespace

// Column deferrals only. A zero pivot requires a zero Schur column; if the
// pivot row is zero too, the row is dependent and contributes L[:,j] = e_j
// and U[j,:] = 0 without eliminating anything.
template <class T>
UnitOutcome<T> lu_unit_lower(const Matrix<T>& a, const ScalarField<T>& field) {
  require_square(a, "lu_unit_lower");
  internal::ImplicitSchur<T> s(a, field);
  while (!s.done()) {
    s.begin_step();
    const Index t = s.step();
    if (!s.pivot_is_zero()) {
      s.eliminate();
      continue;
    }
    if (!s.column_is_zero(t)) {
      NotFactorizable nf;
      nf.dead_end_step = t;
      nf.ambiguous = s.ambiguous();
      if (auto k = first_violation(a, Condition::kUnitLower, field)) {
        nf.witness_k = *k;
      } else {
        nf.witness_k = t;
        nf.ambiguous = true;
      }
      return nf;
    }
    s.clear_column(t);
    if (s.row_is_zero(t)) {
      s.clear_row(t);
      s.unit_step();
    } else {
      s.swap_cols(t, *s.first_nonzero_in_row(t));
      s.eliminate();
    }
  }

  const Index n = a.rows();
  UnitFactorization<T> f;
  f.L = s.physical_L(n);
  f.U = s.physical_U(n);
  f.unit_side = UnitSide::kLower;
  f.row_map = s.row_map();
  f.col_map = s.col_map();
  f.ambiguous = s.ambiguous();
  return f;
}

template <class T>
UnitOutcome<T> lu_unit_upper(const Matrix<T>& a, const ScalarField<T>& field) {
  require_square(a, "lu_unit_upper");
  UnitOutcome<T> dual = lu_unit_lower(transpose(a), field);
  if (auto* nf = std::get_if<NotFactorizable>(&dual)) return *nf;
  auto& lower = std::get<UnitFactorization<T>>(dual);
  UnitFactorization<T> f;
  f.L = transpose(lower.U);
  f.U = transpose(lower.L);
  f.unit_side = UnitSide::kUpper;
  f.row_map = lower.col_map;
  f.col_map = lower.row_map;
  f.ambiguous = lower.ambiguous;
  return f;
}

#define GENLU_INSTANTIATE(T)                                                  \
  template UnitOutcome<T> lu_unit_lower(const Matrix<T>&,                     \
                                        const ScalarField<T>&);               \
  template UnitOutcome<T> lu_unit_upper(const Matrix<T>&,                     \
                                        const ScalarField<T>&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
