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
#include <numeric>
#include <vector>

#include "genlu/certify.hpp"

namespace genlu {

namespace {

// Leibniz expansion over all permutations of the selected columns.
Rational leibniz_det(const Matrix<Rational>& a, const std::vector<Index>& rows,
                     const std::vector<Index>& cols) {
  const std::size_t s = rows.size();
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t x = 0; x < s; ++x) {
      for (std::size_t y = x + 1; y < s; ++y) inversions += perm[x] > perm[y];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t x = 0; x < s && term != 0; ++x) {
      term *= a(rows[x], cols[perm[x]]);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Calls fn on every increasing s-subset of 1..n until fn returns true.
template <class Fn>
bool any_subset(Index n, Index s, Fn&& fn) {
  std::vector<Index> pick(static_cast<std::size_t>(s));
  std::iota(pick.begin(), pick.end(), Index{1});
  while (true) {
    if (fn(pick)) return true;
    Index pos = s - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - s + pos + 1) --pos;
    if (pos < 0) return false;
    ++pick[static_cast<std::size_t>(pos)];
    for (Index q = pos + 1; q < s; ++q) {
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
}

}  // namespace

Index minor_rank(const Matrix<Rational>& a) {
  for (Index s = std::min(a.rows(), a.cols()); s >= 1; --s) {
    const bool found = any_subset(a.rows(), s, [&](const std::vector<Index>& rows) {
      return any_subset(a.cols(), s, [&](const std::vector<Index>& cols) {
        return leibniz_det(a, rows, cols) != 0;
      });
    });
    if (found) return s;
  }
  return 0;
}

Index bareiss_rank(const Matrix<Rational>& a) {
  // Work on columns right to left; the active rows are the first `live`
  // entries of `order`, and pivots are taken from its tail.
  Matrix<Rational> w = a;
  std::vector<Index> order(static_cast<std::size_t>(a.rows()));
  std::iota(order.begin(), order.end(), Index{1});
  Index live = a.rows();
  Rational prev = 1;
  Index r = 0;
  for (Index c = a.cols(); c >= 1 && live > 0; --c) {
    Index at = -1;
    for (Index x = live - 1; x >= 0; --x) {
      if (w(order[static_cast<std::size_t>(x)], c) != 0) {
        at = x;
        break;
      }
    }
    if (at < 0) continue;
    std::swap(order[static_cast<std::size_t>(at)],
              order[static_cast<std::size_t>(live - 1)]);
    const Index p = order[static_cast<std::size_t>(live - 1)];
    --live;
    ++r;
    const Rational pivot = w(p, c);
    for (Index x = 0; x < live; ++x) {
      const Index i = order[static_cast<std::size_t>(x)];
      const Rational f = w(i, c);
      for (Index j = 1; j < c; ++j) {
        w(i, j) = (pivot * w(i, j) - f * w(p, j)) / prev;
      }
      w(i, c) = 0;
    }
    prev = pivot;
  }
  return r;
}

namespace {

Index complete_pivot_rank(const Matrix<double>& a,
                          const ScalarField<double>& field) {
  const auto zero = make_zero_test(field, max_abs(a));
  Matrix<double> w = a;
  const Index m = a.rows();
  const Index n = a.cols();
  Index r = 0;
  for (Index t = 1; t <= std::min(m, n); ++t) {
    Index bi = 0, bj = 0;
    double best = 0.0;
    for (Index i = t; i <= m; ++i) {
      for (Index j = t; j <= n; ++j) {
        if (std::abs(w(i, j)) > best) {
          best = std::abs(w(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == 0 || zero(best)) break;
    for (Index j = 1; j <= n; ++j) std::swap(w(t, j), w(bi, j));
    for (Index i = 1; i <= m; ++i) std::swap(w(i, t), w(i, bj));
    ++r;
    for (Index i = t + 1; i <= m; ++i) {
      const double f = w(i, t) / w(t, t);
      for (Index j = t; j <= n; ++j) w(i, j) -= f * w(t, j);
    }
  }
  return r;
}

}  // namespace

template <>
Index independent_rank(const Matrix<Rational>& a, const ScalarField<Rational>&) {
  if (a.rows() <= 4 && a.cols() <= 4) return minor_rank(a);
  return bareiss_rank(a);
}

template <>
Index independent_rank(const Matrix<double>& a, const ScalarField<double>& field) {
  return complete_pivot_rank(a, field);
}

}  // namespace genlu
