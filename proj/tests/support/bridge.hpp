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

// Conversions between library matrices and oracle grids.

#ifndef GENLU_TESTS_SUPPORT_BRIDGE_HPP_
#define GENLU_TESTS_SUPPORT_BRIDGE_HPP_

#include "genlu/matrix.hpp"
#include "support/oracle.hpp"

namespace genlu_test {

inline oracle::Grid to_grid(const genlu::Matrix<genlu::Rational>& a) {
  oracle::Grid g(a.rows(), std::vector<oracle::Q>(a.cols()));
  for (genlu::Index i = 1; i <= a.rows(); ++i) {
    for (genlu::Index j = 1; j <= a.cols(); ++j) g[i - 1][j - 1] = a(i, j);
  }
  return g;
}

inline genlu::Matrix<genlu::Rational> from_grid(const oracle::Grid& g) {
  genlu::Matrix<genlu::Rational> a(oracle::rows(g), oracle::cols(g));
  for (genlu::Index i = 1; i <= a.rows(); ++i) {
    for (genlu::Index j = 1; j <= a.cols(); ++j) a(i, j) = g[i - 1][j - 1];
  }
  return a;
}

}  // namespace genlu_test

#endif  // GENLU_TESTS_SUPPORT_BRIDGE_HPP_
