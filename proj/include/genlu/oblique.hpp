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

// Oblique projections and the projected Schur state
//   S^o_k = A[:,k:] - A[:,1:k-1] A[1:k-1,1:k-1]^{-1} A[1:k-1,k:]
//         = (I - X (Y^T X)^{-1} Y^T) A[:,k:],  X = A[:,1:k-1], Y = [I; 0],
// whose rows k.. form the classical Schur complement. A column of A that
// lies in the span of the first k-1 columns maps to a zero column of S^o_k.

#ifndef GENLU_OBLIQUE_HPP_
#define GENLU_OBLIQUE_HPP_

#include "genlu/matrix.hpp"

namespace genlu {

// P = X (Y^T X)^{-1} Y^T projects onto range(X) along range(Y)^perp.
template <class T>
struct ObliqueProjector {
  Matrix<T> X;
  Matrix<T> Y;
  Matrix<T> P;

  // Q_o = I - P
  Matrix<T> complement() const;
};

// Throws ShapeError if X and Y differ in shape, PreconditionError if X lacks
// full column rank, SingularMatrixError if Y^T X is singular.
template <class T>
ObliqueProjector<T> oblique_projector(const Matrix<T>& x, const Matrix<T>& y,
                                      const ScalarField<T>& field = {});

// Projector onto span(X) along vectors whose first k entries vanish, with
// k = X.cols(): X (X[1:k,:])^{-1} [I_k 0]. Throws PreconditionError when
// X[1:k,:] is singular.
template <class T>
ObliqueProjector<T> leading_block_projector(const Matrix<T>& x,
                                            const ScalarField<T>& field = {});

// S^o_k, of size rows x (cols - k + 1). k = 1 returns A. Throws BoundsError
// for k outside 1..cols and PreconditionError if A[1:k-1,1:k-1] is singular.
template <class T>
Matrix<T> schur_oblique_state(const Matrix<T>& a, Index k,
                              const ScalarField<T>& field = {});

}  // namespace genlu

#endif  // GENLU_OBLIQUE_HPP_
