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

// Brute-force reference computations for tests. Nothing here calls into the
// library: matrices are plain nested vectors, ranks come from enumerating
// minors with Leibniz determinants, and existence is decided by the rank
// inequalities
//   general:     rank A11 + k >= rank A[1:k,:] + rank A[:,1:k]
//   unit-lower:  rank A11 == rank A[:,1:k]
//   unit-upper:  rank A11 == rank A[1:k,:]
// for every k. Cost is exponential; keep n small.

#ifndef GENLU_TESTS_SUPPORT_ORACLE_HPP_
#define GENLU_TESTS_SUPPORT_ORACLE_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace genlu_test::oracle {

using Q = mpq_class;
using Grid = std::vector<std::vector<Q>>;

inline int rows(const Grid& a) { return static_cast<int>(a.size()); }
inline int cols(const Grid& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

// Determinant of the square selection a[r[i]][c[j]].
inline Q leibniz_det(const Grid& a, const std::vector<int>& r, const std::vector<int>& c) {
  const int k = static_cast<int>(r.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Q total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    Q term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < k && term != 0; ++i) term *= a[r[i]][c[perm[i]]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Q det(const Grid& a) {
  std::vector<int> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  return leibniz_det(a, idx, idx);
}

// All size-k subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Largest k with a nonzero k x k minor.
inline int minor_rank(const Grid& a) {
  for (int k = std::min(rows(a), cols(a)); k > 0; --k) {
    for (const auto& r : subsets(rows(a), k)) {
      for (const auto& c : subsets(cols(a), k)) {
        if (leibniz_det(a, r, c) != 0) return k;
      }
    }
  }
  return 0;
}

// a[r0:r1, c0:c1], half-open, 0-based.
inline Grid block(const Grid& a, int r0, int r1, int c0, int c1) {
  Grid out;
  for (int i = r0; i < r1; ++i) out.emplace_back(a[i].begin() + c0, a[i].begin() + c1);
  return out;
}

inline Grid product(const Grid& l, const Grid& u) {
  const int inner = cols(l);
  const int n = inner == 0 ? (u.empty() ? 0 : cols(u)) : cols(u);
  Grid out(rows(l), std::vector<Q>(n, Q(0)));
  for (int i = 0; i < rows(l); ++i) {
    for (int p = 0; p < inner; ++p) {
      for (int j = 0; j < n; ++j) out[i][j] += l[i][p] * u[p][j];
    }
  }
  return out;
}

enum class Kind { kGeneral, kUnitLower, kUnitUpper };

struct BlockRanks {
  int principal, row_block, col_block;
};

inline BlockRanks block_ranks(const Grid& a, int k) {
  const int n = rows(a);
  return {minor_rank(block(a, 0, k, 0, k)), minor_rank(block(a, 0, k, 0, n)),
          minor_rank(block(a, 0, n, 0, k))};
}

inline bool condition_holds(const Grid& a, int k, Kind kind) {
  const BlockRanks r = block_ranks(a, k);
  switch (kind) {
    case Kind::kGeneral: return r.principal + k >= r.row_block + r.col_block;
    case Kind::kUnitLower: return r.principal == r.col_block;
    case Kind::kUnitUpper: return r.principal == r.row_block;
  }
  return false;
}

inline std::optional<int> first_failure(const Grid& a, Kind kind) {
  for (int k = 1; k <= rows(a); ++k) {
    if (!condition_holds(a, k, kind)) return k;
  }
  return std::nullopt;
}

inline bool exists(const Grid& a, Kind kind) { return !first_failure(a, kind); }

// Every leading principal minor nonzero.
inline bool strongly_nonsingular(const Grid& a) {
  for (int k = 1; k <= rows(a); ++k) {
    if (det(block(a, 0, k, 0, k)) == 0) return false;
  }
  return true;
}

// Deterministic small-integer matrices for exhaustive-ish sweeps: entry
// (i, j) of matrix `index` over the alphabet {0, 1, -1, 2}.
inline Grid enumerate(int n, long index) {
  static constexpr int kAlphabet[] = {0, 1, -1, 2};
  Grid a(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i][j] = kAlphabet[index % 4];
      index /= 4;
    }
  }
  return a;
}

}  // namespace genlu_test::oracle

#endif  // GENLU_TESTS_SUPPORT_ORACLE_HPP_
