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

#include "genlu/matgen.hpp"

#include <string>

#include "genlu/certify.hpp"

namespace genlu {

namespace {

constexpr std::uint64_t kStreamStride = 0xD1B54A32D192ED03ULL;
constexpr int kMaxAttempts = 100000;

class Draw {
 public:
  Draw(std::uint64_t seed, int attempt, int bound)
      : rng_(seed ^ (static_cast<std::uint64_t>(attempt) * kStreamStride)),
        bound_(bound) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return rng_.uniform(lo, hi); }

  Rational rational() { return make(uniform(-bound_, bound_)); }
  Rational nonzero() {
    const std::int64_t p = uniform(1, bound_);
    return make(uniform(0, 1) ? -p : p);
  }
  Rational sparse() { return uniform(0, 3) == 0 ? Rational(0) : rational(); }

  // rows x cols lower (upper) trapezoid, nonzero diagonal optional.
  Matrix<Rational> lower(Index rows, Index cols, bool unit, bool nonzero_diag) {
    Matrix<Rational> m(rows, cols);
    for (Index i = 1; i <= rows; ++i) {
      for (Index j = 1; j <= std::min(i, cols); ++j) {
        if (i == j && unit) {
          m(i, j) = 1;
        } else {
          m(i, j) = (i == j && nonzero_diag) ? nonzero() : sparse();
        }
      }
    }
    return m;
  }
  Matrix<Rational> upper(Index rows, Index cols, bool nonzero_diag) {
    Matrix<Rational> m(rows, cols);
    for (Index i = 1; i <= rows; ++i) {
      for (Index j = i; j <= cols; ++j) {
        m(i, j) = (i == j && nonzero_diag) ? nonzero() : sparse();
      }
    }
    return m;
  }
  Matrix<Rational> sparse_block(Index rows, Index cols) {
    Matrix<Rational> m(rows, cols);
    for (Index i = 1; i <= rows; ++i) {
      for (Index j = 1; j <= cols; ++j) m(i, j) = sparse();
    }
    return m;
  }

 private:
  Rational make(std::int64_t p) {
    const std::int64_t d = uniform(1, 2 * bound_);
    const std::int64_t q = d <= bound_ ? d : bound_ - d;
    Rational x(static_cast<long>(p), static_cast<long>(q));
    x.canonicalize();
    return x;
  }

  SplitMix64 rng_;
  std::int64_t bound_;
};

void place(Matrix<Rational>& dst, const Matrix<Rational>& block, Index row0,
           Index col0) {
  for (Index i = 1; i <= block.rows(); ++i) {
    for (Index j = 1; j <= block.cols(); ++j) dst(row0 + i - 1, col0 + j - 1) = block(i, j);
  }
}

Matrix<Rational> product_lu(Draw& d, Index n, Index r) {
  Matrix<Rational> l = d.lower(n, r, false, false);
  Matrix<Rational> u = d.upper(r, n, false);
  return matmul(l, u);
}

// Strongly non-singular n x n product: both diagonals drawn nonzero.
Matrix<Rational> strongly_nonsingular(Draw& d, Index n) {
  Matrix<Rational> l = d.lower(n, n, false, true);
  Matrix<Rational> u = d.upper(n, n, true);
  return matmul(l, u);
}

Matrix<Rational> block_embed(Draw& d, Index n, Index rank) {
  const Index m = n / 3;
  const Index core = n - 2 * m;  // m + n % 3
  const bool core_is_c = m > 0 && n % 3 == 0 && d.uniform(0, 1) == 1;
  if (m == 0) return product_lu(d, core, std::min(rank, core));

  Matrix<Rational> a(n, n);
  Matrix<Rational> b, c, dd;
  if (core_is_c) {
    c = product_lu(d, m, std::min(rank, m));
    b = d.sparse_block(core, core);
  } else {
    b = product_lu(d, core, std::min(rank, core));
    c = d.sparse_block(m, m);
  }
  dd = d.sparse_block(core, m);
  place(a, c, m + 1, m + core + 1);
  place(a, b, 2 * m + 1, m + 1);
  place(a, dd, 2 * m + 1, m + core + 1);
  return a;
}

Generated anti_diagonal_trap(Draw& d, Index n) {
  const Index k0 = d.uniform(1, n - 1);
  Matrix<Rational> a(n, n);
  place(a, strongly_nonsingular(d, k0 - 1), 1, 1);
  a(k0, k0 + 1) = 1;
  a(k0 + 1, k0) = 1;
  const Index tail = n - k0 - 1;
  place(a, d.sparse_block(tail, tail), k0 + 2, k0 + 2);
  place(a, d.sparse_block(tail, k0 - 1), k0 + 2, 1);
  place(a, d.sparse_block(k0 - 1, tail), 1, k0 + 2);
  return {std::move(a), k0, 0};
}

Matrix<Rational> unit_lower_feasible(Draw& d, Index n, Index rank) {
  Matrix<Rational> l = d.lower(n, n, true, false);
  Matrix<Rational> u = d.upper(n, n, false);
  // Zero out n - rank rows of U, picked by a partial Fisher-Yates shuffle.
  std::vector<Index> rows(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
  for (Index x = 0; x < n - rank; ++x) {
    const Index y = d.uniform(x, n - 1);
    std::swap(rows[static_cast<std::size_t>(x)], rows[static_cast<std::size_t>(y)]);
    const Index row = rows[static_cast<std::size_t>(x)];
    for (Index j = 1; j <= n; ++j) u(row, j) = 0;
  }
  return matmul(l, u);
}

Matrix<Rational> random_sparse(Draw& d, Index n) {
  Matrix<Rational> a(n, n);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) a(i, j) = d.uniform(0, 1) == 0 ? Rational(0) : d.rational();
  }
  return a;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kProductLU:
      return "product-lu";
    case Family::kBlockEmbed:
      return "block-embed";
    case Family::kAntiDiagonalTrap:
      return "anti-diagonal-trap";
    case Family::kUnitLowerFeasible:
      return "unit-lower-feasible";
    case Family::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kProductLU, Family::kBlockEmbed, Family::kAntiDiagonalTrap,
                   Family::kUnitLowerFeasible, Family::kRandom}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Generated gen(const GenSpec& spec) {
  if (spec.n < 1) throw SpecError("gen: n must be at least 1");
  if (spec.rank < 0 || spec.rank > spec.n) {
    throw SpecError("gen: rank " + std::to_string(spec.rank) + " exceeds n = " +
                    std::to_string(spec.n));
  }
  if (spec.entry_bound < 1) throw SpecError("gen: entry_bound must be positive");
  if (spec.family == Family::kAntiDiagonalTrap && spec.n < 2) {
    throw SpecError("gen: anti-diagonal trap needs n >= 2");
  }

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Draw d(spec.seed, attempt, spec.entry_bound);
    switch (spec.family) {
      case Family::kProductLU: {
        Matrix<Rational> a = product_lu(d, spec.n, spec.rank);
        if (independent_rank(a) != spec.rank) continue;
        return {std::move(a), std::nullopt, attempt};
      }
      case Family::kBlockEmbed:
        return {block_embed(d, spec.n, spec.rank), std::nullopt, attempt};
      case Family::kAntiDiagonalTrap:
        return anti_diagonal_trap(d, spec.n);
      case Family::kUnitLowerFeasible: {
        Matrix<Rational> a = unit_lower_feasible(d, spec.n, spec.rank);
        if (independent_rank(a) != spec.rank) continue;
        return {std::move(a), std::nullopt, attempt};
      }
      case Family::kRandom:
        return {random_sparse(d, spec.n), std::nullopt, attempt};
    }
  }
  throw SpecError("gen: no draw reached the requested rank");
}

Matrix<Rational> gen_rectangular(Index rows, Index cols, Index rank,
                                 std::uint64_t seed, int entry_bound) {
  if (rows < 0 || cols < 0 || rank < 0 || rank > std::min(rows, cols)) {
    throw SpecError("gen_rectangular: rank exceeds min(rows, cols)");
  }
  if (entry_bound < 1) throw SpecError("gen_rectangular: entry_bound must be positive");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Draw d(seed, attempt, entry_bound);
    Matrix<Rational> x(rows, rank);
    Matrix<Rational> y(rank, cols);
    for (Index i = 1; i <= rows; ++i) {
      for (Index j = 1; j <= rank; ++j) x(i, j) = d.rational();
    }
    for (Index i = 1; i <= rank; ++i) {
      for (Index j = 1; j <= cols; ++j) y(i, j) = d.rational();
    }
    Matrix<Rational> a = matmul(x, y);
    if (independent_rank(a) == rank) return a;
  }
  throw SpecError("gen_rectangular: no draw reached the requested rank");
}

}  // namespace genlu
