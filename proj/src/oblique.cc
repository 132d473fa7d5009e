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

#include "genlu/oblique.hpp"

#include <string>

#include "genlu/rank.hpp"

namespace genlu {

template <class T>
Matrix<T> ObliqueProjector<T>::complement() const {
  return subtract(Matrix<T>::identity(P.rows()), P);
}

template <class T>
ObliqueProjector<T> oblique_projector(const Matrix<T>& x, const Matrix<T>& y,
                                      const ScalarField<T>& field) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeError("oblique_projector: X and Y must have the same shape");
  }
  if (rank(x, field) != x.cols()) {
    throw PreconditionError("oblique_projector: X does not have full column rank");
  }
  const Matrix<T> yt = transpose(y);
  Matrix<T> gram_inv;
  try {
    gram_inv = inverse(matmul(yt, x), field);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("oblique_projector: Y^T X is singular");
  }
  return {x, y, matmul(matmul(x, gram_inv), yt)};
}

template <class T>
ObliqueProjector<T> leading_block_projector(const Matrix<T>& x,
                                            const ScalarField<T>& field) {
  const Index k = x.cols();
  if (k > x.rows()) {
    throw ShapeError("leading_block_projector: X has more columns than rows");
  }
  Matrix<T> y(x.rows(), k);
  for (Index i = 1; i <= k; ++i) y(i, i) = T(1);
  Matrix<T> top_inv;
  try {
    top_inv = inverse(submatrix(x, Range::to(k), Range::all()), field);
  } catch (const SingularMatrixError&) {
    throw PreconditionError("leading_block_projector: X[1:k,:] is singular");
  }
  return {x, y, matmul(matmul(x, top_inv), transpose(y))};
}

template <class T>
Matrix<T> schur_oblique_state(const Matrix<T>& a, Index k,
                              const ScalarField<T>& field) {
  if (k < 1 || k > a.cols() || k - 1 > a.rows()) {
    throw BoundsError("schur_oblique_state: k = " + std::to_string(k) +
                      " out of range");
  }
  const Matrix<T> trailing = submatrix(a, Range::all(), Range::from(k));
  if (k == 1) return trailing;
  Matrix<T> lead_inv;
  try {
    lead_inv = inverse(submatrix(a, 1, k - 1, 1, k - 1), field);
  } catch (const SingularMatrixError&) {
    throw PreconditionError(
        "schur_oblique_state: leading block A[1:k-1,1:k-1] is singular");
  }
  const Matrix<T> correction =
      matmul(matmul(submatrix(a, Range::all(), Range::to(k - 1)), lead_inv),
             submatrix(a, Range::to(k - 1), Range::from(k)));
  return subtract(trailing, correction);
}

#define GENLU_INSTANTIATE(T)                                                  \
  template struct ObliqueProjector<T>;                                        \
  template ObliqueProjector<T> oblique_projector(const Matrix<T>&,            \
                                                 const Matrix<T>&,            \
                                                 const ScalarField<T>&);      \
  template ObliqueProjector<T> leading_block_projector(const Matrix<T>&,      \
                                                       const ScalarField<T>&); \
  template Matrix<T> schur_oblique_state(const Matrix<T>&, Index,             \
                                         const ScalarField<T>&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
