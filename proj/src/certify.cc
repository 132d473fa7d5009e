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

#include "genlu/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace genlu {

bool Certificate::passed() const {
  return reconstruct_ok && lower_tri_ok && upper_tri_ok && rank_revealing_ok &&
         sparsity_ok && unit_diag_ok.value_or(true) && witness_ok.value_or(true) &&
         violations.empty();
}

namespace {

// Cap on per-entry violations recorded for one check.
constexpr std::size_t kMaxEntryViolations = 32;

std::string dims(Index r, Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

// Structural zero test used for triangularity and sparsity. Exact: == 0.
// Float: relative to the largest entry of the factor being inspected.
template <class T>
ZeroTest<T> structural_zero(const Matrix<T>& m, Index n,
                            const ScalarField<T>& field) {
  if constexpr (kIsExact<T>) {
    return make_zero_test(field, 0.0);
  } else {
    ScalarField<double> scaled = field;
    scaled.relative_tolerance *= static_cast<double>(std::max<Index>(n, 1));
    return make_zero_test(scaled, max_abs(m));
  }
}

template <class T>
double inf_norm(const Matrix<T>& m) {
  double best = 0.0;
  for (Index i = 1; i <= m.rows(); ++i) {
    double sum = 0.0;
    for (Index j = 1; j <= m.cols(); ++j) sum += magnitude(m(i, j));
    best = std::max(best, sum);
  }
  return best;
}

class Recorder {
 public:
  explicit Recorder(Certificate& cert) : cert_(cert) {}

  void entry(bool& flag, const std::string& check, Index i, Index j,
             std::string detail) {
    flag = false;
    if (count(check) >= kMaxEntryViolations) return;
    cert_.violations.push_back({check, std::pair{i, j}, std::nullopt, std::move(detail)});
  }
  void at_k(bool& flag, const std::string& check, Index k, std::string detail) {
    flag = false;
    cert_.violations.push_back({check, std::nullopt, k, std::move(detail)});
  }
  void general(bool& flag, const std::string& check, std::string detail) {
    flag = false;
    cert_.violations.push_back({check, std::nullopt, std::nullopt, std::move(detail)});
  }

 private:
  std::size_t count(const std::string& check) const {
    return static_cast<std::size_t>(
        std::count_if(cert_.violations.begin(), cert_.violations.end(),
                      [&](const Violation& v) { return v.check == check; }));
  }
  Certificate& cert_;
};

// Compares `product` against `target`; exact equality over the rationals,
// ||product - target||_inf <= n * tol * ||target||_inf over doubles.
template <class T>
void check_reconstruction(const Matrix<T>& target, const Matrix<T>& product,
                          const ScalarField<T>& field, Certificate& cert,
                          Recorder& rec) {
  const Matrix<T> diff = subtract(product, target);
  cert.max_residual = inf_norm(diff);
  if constexpr (kIsExact<T>) {
    for (Index i = 1; i <= diff.rows(); ++i) {
      for (Index j = 1; j <= diff.cols(); ++j) {
        if (diff(i, j) != 0) {
          rec.entry(cert.reconstruct_ok, "reconstruct", i, j,
                    "product entry " + format_scalar(product(i, j)) +
                        " != " + format_scalar(target(i, j)));
        }
      }
    }
  } else {
    const double bound = static_cast<double>(std::max<Index>(target.rows(), 1)) *
                         field.relative_tolerance * inf_norm(target);
    if (cert.max_residual > bound) {
      Index bi = 1, bj = 1;
      for (Index i = 1; i <= diff.rows(); ++i) {
        for (Index j = 1; j <= diff.cols(); ++j) {
          if (std::abs(diff(i, j)) > std::abs(diff(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      rec.entry(cert.reconstruct_ok, "reconstruct", bi, bj,
                "residual " + format_scalar(cert.max_residual) + " exceeds " +
                    format_scalar(bound));
    }
  }
}

template <class T>
void check_lower(const Matrix<T>& l, const ZeroTest<T>& zero, bool& flag,
                 Recorder& rec, const std::string& check = "lower_tri") {
  for (Index i = 1; i <= l.rows(); ++i) {
    for (Index j = i + 1; j <= l.cols(); ++j) {
      if (!zero(l(i, j))) {
        rec.entry(flag, check, i, j, "nonzero above the diagonal");
      }
    }
  }
}

template <class T>
void check_upper(const Matrix<T>& u, const ZeroTest<T>& zero, bool& flag,
                 Recorder& rec, const std::string& check = "upper_tri") {
  for (Index i = 2; i <= u.rows(); ++i) {
    for (Index j = 1; j < std::min(i, u.cols() + 1); ++j) {
      if (!zero(u(i, j))) {
        rec.entry(flag, check, i, j, "nonzero below the diagonal");
      }
    }
  }
}

// prefix[p] = rank of the first p rows (rows == true) or columns of `a`.
template <class T>
std::vector<Index> prefix_ranks(const Matrix<T>& a, bool rows,
                                const ScalarField<T>& field) {
  const Index n = rows ? a.rows() : a.cols();
  std::vector<Index> prefix(static_cast<std::size_t>(n + 1), 0);
  for (Index p = 1; p <= n; ++p) {
    const Matrix<T> block = rows ? submatrix(a, Range::to(p), Range::all())
                                 : submatrix(a, Range::all(), Range::to(p));
    prefix[static_cast<std::size_t>(p)] = independent_rank(block, field);
  }
  return prefix;
}

bool dependent(const std::vector<Index>& prefix, Index p) {
  return prefix[static_cast<std::size_t>(p)] ==
         prefix[static_cast<std::size_t>(p - 1)];
}

}  // namespace

template <class T>
Certificate certify_general(const Matrix<T>& a, const Factorization<T>& f,
                            const ScalarField<T>& field) {
  Certificate cert;
  Recorder rec(cert);
  const Index n = a.rows();
  const Index r = f.rank;
  if (!a.square() || f.L.rows() != n || f.L.cols() != r || f.U.rows() != r ||
      f.U.cols() != n) {
    rec.general(cert.reconstruct_ok, "shape",
                "A " + dims(a.rows(), a.cols()) + ", L " +
                    dims(f.L.rows(), f.L.cols()) + ", U " +
                    dims(f.U.rows(), f.U.cols()) + ", rank " + std::to_string(r));
    return cert;
  }

  check_reconstruction(a, matmul(f.L, f.U), field, cert, rec);
  const auto l_zero = structural_zero(f.L, n, field);
  const auto u_zero = structural_zero(f.U, n, field);
  check_lower(f.L, l_zero, cert.lower_tri_ok, rec);
  check_upper(f.U, u_zero, cert.upper_tri_ok, rec);

  const Index true_rank = independent_rank(a, field);
  if (true_rank != r) {
    rec.general(cert.rank_revealing_ok, "rank_revealing",
                "inner dimension " + std::to_string(r) + " but rank(A) = " +
                    std::to_string(true_rank));
  }

  if (f.row_map.size() != n || !f.row_map.is_permutation() ||
      f.col_map.size() != n || !f.col_map.is_permutation()) {
    rec.general(cert.sparsity_ok, "index_map",
                "row_map/col_map are not permutations of 1.." + std::to_string(n));
    return cert;
  }

  const auto row_prefix = prefix_ranks(a, true, field);
  const auto col_prefix = prefix_ranks(a, false, field);

  for (Index i = 1; i <= n; ++i) {
    const Index i0 = f.row_map(i);
    const std::string where = "logical row " + std::to_string(i) +
                              " -> physical " + std::to_string(i0);
    if (i <= r) {
      if (i0 < i) rec.at_k(cert.sparsity_ok, "row_order", i, where + ": expected i0 >= i");
      for (Index c = i + 1; c <= r; ++c) {
        if (!l_zero(f.L(i0, c))) {
          rec.entry(cert.sparsity_ok, "row_sparsity", i0, c,
                    where + ": expected L[i0, i+1:] = 0");
        }
      }
      if (dependent(row_prefix, i0)) {
        rec.at_k(cert.sparsity_ok, "row_independence", i,
                 where + ": row is dependent on the previous rows");
      }
    } else {
      if (i0 > i) rec.at_k(cert.sparsity_ok, "row_order", i, where + ": expected i0 <= i");
      if (i0 <= r) {
        for (Index c = i0; c <= r; ++c) {
          if (!l_zero(f.L(i0, c))) {
            rec.entry(cert.sparsity_ok, "row_sparsity", i0, c,
                      where + ": expected L[i0, i0:] = 0");
          }
        }
      }
      if (!dependent(row_prefix, i0)) {
        rec.at_k(cert.sparsity_ok, "row_dependence", i,
                 where + ": row is independent of the previous rows");
      }
    }
  }

  for (Index j = 1; j <= n; ++j) {
    const Index j0 = f.col_map(j);
    const std::string where = "logical column " + std::to_string(j) +
                              " -> physical " + std::to_string(j0);
    if (j <= r) {
      if (j0 < j) rec.at_k(cert.sparsity_ok, "col_order", j, where + ": expected j0 >= j");
      for (Index c = j + 1; c <= r; ++c) {
        if (!u_zero(f.U(c, j0))) {
          rec.entry(cert.sparsity_ok, "col_sparsity", c, j0,
                    where + ": expected U[j+1:, j0] = 0");
        }
      }
      if (dependent(col_prefix, j0)) {
        rec.at_k(cert.sparsity_ok, "col_independence", j,
                 where + ": column is dependent on the previous columns");
      }
    } else {
      if (j0 > j) rec.at_k(cert.sparsity_ok, "col_order", j, where + ": expected j0 <= j");
      if (j0 <= r) {
        for (Index c = j0; c <= r; ++c) {
          if (!u_zero(f.U(c, j0))) {
            rec.entry(cert.sparsity_ok, "col_sparsity", c, j0,
                      where + ": expected U[j0:, j0] = 0");
          }
        }
      }
      if (!dependent(col_prefix, j0)) {
        rec.at_k(cert.sparsity_ok, "col_dependence", j,
                 where + ": column is independent of the previous columns");
      }
    }
  }
  return cert;
}

namespace {

// Unit-lower certification; certify_unit maps the unit-upper case onto this
// through the transpose.
template <class T>
Certificate certify_unit_lower(const Matrix<T>& a, const Matrix<T>& l,
                               const Matrix<T>& u, const IndexMap& row_map,
                               const IndexMap& col_map,
                               const ScalarField<T>& field) {
  Certificate cert;
  cert.unit_diag_ok = true;
  Recorder rec(cert);
  const Index n = a.rows();
  if (!a.square() || l.rows() != n || l.cols() != n || u.rows() != n ||
      u.cols() != n) {
    rec.general(cert.reconstruct_ok, "shape",
                "A " + dims(a.rows(), a.cols()) + ", L " + dims(l.rows(), l.cols()) +
                    ", U " + dims(u.rows(), u.cols()));
    return cert;
  }

  check_reconstruction(a, matmul(l, u), field, cert, rec);
  const auto l_zero = structural_zero(l, n, field);
  const auto u_zero = structural_zero(u, n, field);
  check_lower(l, l_zero, cert.lower_tri_ok, rec);
  check_upper(u, u_zero, cert.upper_tri_ok, rec);
  bool unit_ok = true;
  for (Index i = 1; i <= n; ++i) {
    if (!l_zero(l(i, i) - T(1))) {
      rec.entry(unit_ok, "unit_diag", i, i, "diagonal entry " + format_scalar(l(i, i)));
    }
  }
  cert.unit_diag_ok = unit_ok;

  // Not rank-revealing in shape; the rank shows up as the number of nonzero
  // rows of U instead.
  Index nonzero_rows = 0;
  for (Index i = 1; i <= n; ++i) {
    bool zero_row = true;
    for (Index j = 1; j <= n; ++j) zero_row = zero_row && u_zero(u(i, j));
    nonzero_rows += !zero_row;
  }
  const Index true_rank = independent_rank(a, field);
  if (nonzero_rows != true_rank) {
    rec.general(cert.rank_revealing_ok, "rank_revealing",
                std::to_string(nonzero_rows) + " nonzero rows in U but rank(A) = " +
                    std::to_string(true_rank));
  }

  if (row_map.size() != n || !row_map.is_identity() || col_map.size() != n ||
      !col_map.is_permutation()) {
    rec.general(cert.sparsity_ok, "index_map",
                "expected identity row_map and a column permutation");
    return cert;
  }

  const auto row_prefix = prefix_ranks(a, true, field);
  // Column prefixes of B = A P_c^{-1}.
  const Matrix<T> b = permute_cols(a, col_map);
  const auto b_col_prefix = prefix_ranks(b, false, field);

  for (Index j = 1; j <= n; ++j) {
    const Index j0 = col_map(j);
    const bool row_dep = dependent(row_prefix, j);
    const std::string where = "logical " + std::to_string(j) + " -> physical column " +
                              std::to_string(j0);
    if (row_dep != dependent(b_col_prefix, j)) {
      rec.at_k(cert.sparsity_ok, "structure", j,
               where + ": row and column dependence of B disagree");
    }
    if (row_dep) {
      if (j0 > j) rec.at_k(cert.sparsity_ok, "col_order", j, where + ": expected j0 <= j");
      for (Index i = 1; i <= n; ++i) {
        const bool ok = i == j ? l_zero(l(i, j) - T(1)) : l_zero(l(i, j));
        if (!ok) rec.entry(cert.sparsity_ok, "dependent_L", i, j, where + ": expected L[:,j] = e_j");
      }
      for (Index c = 1; c <= n; ++c) {
        if (!u_zero(u(j, c))) {
          rec.entry(cert.sparsity_ok, "dependent_U_row", j, c, where + ": expected U[j,:] = 0");
        }
      }
      for (Index i = j0; i <= n; ++i) {
        if (!u_zero(u(i, j0))) {
          rec.entry(cert.sparsity_ok, "dependent_U_col", i, j0,
                    where + ": expected U[j0:, j0] = 0");
        }
      }
    } else {
      if (j0 < j) rec.at_k(cert.sparsity_ok, "col_order", j, where + ": expected j0 >= j");
      for (Index i = j + 1; i <= n; ++i) {
        if (!u_zero(u(i, j0))) {
          rec.entry(cert.sparsity_ok, "independent_U_col", i, j0,
                    where + ": expected U[j+1:, j0] = 0");
        }
      }
    }
  }
  return cert;
}

std::string transposed_check(const std::string& check) {
  static const std::pair<const char*, const char*> kSwaps[] = {
      {"lower_tri", "upper_tri"},
      {"col_order", "row_order"},
      {"dependent_L", "dependent_U"},
      {"dependent_U_row", "dependent_L_col"},
      {"dependent_U_col", "dependent_L_row"},
      {"independent_U_col", "independent_L_row"},
  };
  for (const auto& [a, b] : kSwaps) {
    if (check == a) return b;
    if (check == b) return a;
  }
  return check;
}

}  // namespace

template <class T>
Certificate certify_unit(const Matrix<T>& a, const UnitFactorization<T>& f,
                         const ScalarField<T>& field) {
  if (f.unit_side == UnitSide::kLower) {
    return certify_unit_lower(a, f.L, f.U, f.row_map, f.col_map, field);
  }
  Certificate cert = certify_unit_lower(transpose(a), transpose(f.U), transpose(f.L),
                                        f.col_map, f.row_map, field);
  std::swap(cert.lower_tri_ok, cert.upper_tri_ok);
  for (auto& v : cert.violations) {
    v.check = transposed_check(v.check);
    if (v.position) std::swap(v.position->first, v.position->second);
  }
  return cert;
}

template <class T>
Certificate certify_pivoted(const Matrix<T>& a, const PivotedFactorization<T>& f,
                            PivotKind kind, const ScalarField<T>& field) {
  Certificate cert;
  Recorder rec(cert);
  cert.unit_diag_ok = true;
  const Index m = a.rows();
  const Index n = a.cols();
  const Index r = f.rank;
  const Index inner = kind == PivotKind::kPartial ? m : r;
  if ((kind == PivotKind::kPartial && !a.square()) || f.L.rows() != m ||
      f.L.cols() != inner || f.U.rows() != inner || f.U.cols() != n) {
    rec.general(cert.reconstruct_ok, "shape",
                "A " + dims(m, n) + ", L " + dims(f.L.rows(), f.L.cols()) + ", U " +
                    dims(f.U.rows(), f.U.cols()));
    return cert;
  }
  if (f.P.size() != m || !f.P.is_permutation() || f.Q.size() != n ||
      !f.Q.is_permutation() || (kind == PivotKind::kPartial && !f.Q.is_identity())) {
    rec.general(cert.reconstruct_ok, "index_map", "P or Q is not a valid permutation");
    return cert;
  }
  const Matrix<T> paq = permute_cols(permute_rows(a, f.P), f.Q);
  check_reconstruction(paq, matmul(f.L, f.U), field, cert, rec);
  const auto l_zero = structural_zero(f.L, std::max(m, n), field);
  const auto u_zero = structural_zero(f.U, std::max(m, n), field);
  check_lower(f.L, l_zero, cert.lower_tri_ok, rec);
  check_upper(f.U, u_zero, cert.upper_tri_ok, rec);
  bool unit_ok = true;
  for (Index i = 1; i <= std::min(f.L.rows(), f.L.cols()); ++i) {
    if (!l_zero(f.L(i, i) - T(1))) {
      rec.entry(unit_ok, "unit_diag", i, i, "diagonal entry " + format_scalar(f.L(i, i)));
    }
  }
  cert.unit_diag_ok = unit_ok;
  const Index true_rank = independent_rank(a, field);
  if (r != true_rank) {
    rec.general(cert.rank_revealing_ok, "rank_revealing",
                "reported rank " + std::to_string(r) + " but rank(A) = " +
                    std::to_string(true_rank));
  }
  return cert;
}

template <class T>
Certificate certify_nonexistence(const Matrix<T>& a, Condition c, Index witness_k,
                                 const ScalarField<T>& field) {
  Certificate cert;
  Recorder rec(cert);
  bool witness_ok = true;
  if (!a.square() || witness_k < 1 || witness_k > a.rows()) {
    rec.general(witness_ok, "witness", "witness k out of range");
    cert.witness_ok = false;
    return cert;
  }
  for (Index k = 1; k <= witness_k; ++k) {
    const Index np = k - independent_rank(submatrix(a, 1, k, 1, k), field);
    const Index nc = k - independent_rank(submatrix(a, Range::all(), Range::to(k)), field);
    const Index nr = k - independent_rank(submatrix(a, Range::to(k), Range::all()), field);
    bool holds = false;
    switch (c) {
      case Condition::kGeneral:
        holds = np <= nc + nr;
        break;
      case Condition::kUnitLower:
        holds = np == nc;
        break;
      case Condition::kUnitUpper:
        holds = np == nr;
        break;
    }
    const std::string nullities = "nullities (" + std::to_string(np) + ", " +
                                  std::to_string(nc) + ", " + std::to_string(nr) + ")";
    if (k < witness_k && !holds) {
      rec.at_k(witness_ok, "witness", k, "condition already fails before the witness: " + nullities);
    } else if (k == witness_k && holds) {
      rec.at_k(witness_ok, "witness", k, "condition holds at the witness: " + nullities);
    }
  }
  cert.witness_ok = witness_ok;
  return cert;
}

#define GENLU_INSTANTIATE(T)                                                     \
  template Certificate certify_general(const Matrix<T>&, const Factorization<T>&, \
                                       const ScalarField<T>&);                   \
  template Certificate certify_unit(const Matrix<T>&, const UnitFactorization<T>&, \
                                    const ScalarField<T>&);                      \
  template Certificate certify_pivoted(const Matrix<T>&,                         \
                                       const PivotedFactorization<T>&, PivotKind, \
                                       const ScalarField<T>&);                   \
  template Certificate certify_nonexistence(const Matrix<T>&, Condition, Index,  \
                                            const ScalarField<T>&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
