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

#include <algorithm>
#include <string>

#include "genlu/factor.hpp"
#include "implicit_schur.hpp"

namespace genlu {

template <class T>
PivotedFactorization<T> lu_partial_pivot(const Matrix<T>& a,
                                         const ScalarField<T>& field) {
  if (!a.square() || a.rows() == 0) {
    throw ShapeError("lu_partial_pivot: matrix is not a non-empty square");
  }
  internal::ImplicitSchur<T> s(a, field);
  while (!s.done()) {
    s.begin_step();
    const Index t = s.step();
    std::optional<Index> pivot;
    for (Index i = t; i <= s.rows(); ++i) {
      if (s.is_zero(s.at(i, t))) continue;
      if constexpr (kIsExact<T>) {
        pivot = i;
        break;
      } else if (!pivot || magnitude(s.at(i, t)) > magnitude(s.at(*pivot, t))) {
        pivot = i;
      }
    }
    if (!pivot) {
      s.clear_column(t);
      s.unit_step();
      continue;
    }
    s.swap_rows(t, *pivot);
    s.eliminate();
  }
  const Index n = a.rows();
  PivotedFactorization<T> f;
  f.P = s.row_map();
  f.Q = IndexMap(n);
  f.L = s.logical_L(n);
  f.U = s.logical_U(n);
  f.rank = rank(a, field);
  return f;
}

template <class T>
PivotedFactorization<T> lu_full_pivot(const Matrix<T>& a,
                                      const ScalarField<T>& field) {
  internal::ImplicitSchur<T> s(a, field);
  while (!s.done()) {
    s.begin_step();
    const Index t = s.step();
    const auto best = s.largest_active_entry();
    if (!best) break;
    s.swap_rows(t, best->first);
    s.swap_cols(t, best->second);
    s.eliminate();
  }
  const Index r = s.step() - 1;
  PivotedFactorization<T> f;
  f.P = s.row_map();
  f.Q = s.col_map();
  f.L = s.logical_L(r);
  f.U = s.logical_U(r);
  f.rank = r;
  return f;
}

#define GENLU_INSTANTIATE(T)                                                  \
  template PivotedFactorization<T> lu_partial_pivot(const Matrix<T>&,         \
                                                    const ScalarField<T>&);   \
  template PivotedFactorization<T> lu_full_pivot(const Matrix<T>&,            \
                                                 const ScalarField<T>&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
