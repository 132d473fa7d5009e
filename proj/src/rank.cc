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

#include "genlu/rank.hpp"

#include <string>

namespace genlu {

template <class T>
Index rank(const Matrix<T>& a, const ScalarField<T>& field) {
  const auto zero = make_zero_test(field, max_abs(a));
  Matrix<T> work = a;
  const Index m = a.rows();
  const Index n = a.cols();
  Index r = 0;
  for (Index c = 1; c <= n && r < m; ++c) {
    Index pivot = 0;
    for (Index i = r + 1; i <= m; ++i) {
      if (zero(work(i, c))) continue;
      if constexpr (kIsExact<T>) {
        pivot = i;
        break;
      } else if (pivot == 0 || magnitude(work(i, c)) > magnitude(work(pivot, c))) {
        pivot = i;
      }
    }
    if (pivot == 0) continue;
    ++r;
    if (pivot != r) {
      for (Index j = c; j <= n; ++j) std::swap(work(r, j), work(pivot, j));
    }
    for (Index i = r + 1; i <= m; ++i) {
      if (work(i, c) == 0) continue;
      const T f = work(i, c) / work(r, c);
      for (Index j = c; j <= n; ++j) work(i, j) -= f * work(r, j);
    }
  }
  return r;
}

template <class T>
Index nullity(const Matrix<T>& a, const ScalarField<T>& field) {
  return a.cols() - rank(a, field);
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::kGeneral:
      return "general";
    case Condition::kUnitLower:
      return "unit-lower";
    case Condition::kUnitUpper:
      return "unit-upper";
  }
  return "unknown";
}

bool NullityRecord::ok(Condition c) const {
  switch (c) {
    case Condition::kGeneral:
      return general_ok;
    case Condition::kUnitLower:
      return unit_lower_ok;
    case Condition::kUnitUpper:
      return unit_upper_ok;
  }
  return false;
}

bool ExistenceReport::exists(Condition c) const {
  switch (c) {
    case Condition::kGeneral:
      return general_exists;
    case Condition::kUnitLower:
      return unit_lower_exists;
    case Condition::kUnitUpper:
      return unit_upper_exists;
  }
  return false;
}

std::optional<Index> ExistenceReport::witness(Condition c) const {
  for (const auto& rec : per_k) {
    if (!rec.ok(c)) return rec.k;
  }
  return std::nullopt;
}

namespace {

template <class T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.square()) {
    throw ShapeError(std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + ", expected square");
  }
}

}  // namespace

template <class T>
NullityRecord nullity_record(const Matrix<T>& a, Index k,
                             const ScalarField<T>& field) {
  require_square(a, "nullity_record");
  if (k < 1 || k > a.rows()) throw BoundsError("nullity_record: k out of range");
  NullityRecord rec;
  rec.k = k;
  rec.null_principal = nullity(submatrix(a, 1, k, 1, k), field);
  rec.null_col_block = nullity(submatrix(a, Range::all(), Range::to(k)), field);
  rec.null_row_block =
      nullity(transpose(submatrix(a, Range::to(k), Range::all())), field);
  rec.general_ok =
      rec.null_principal <= rec.null_col_block + rec.null_row_block;
  rec.unit_lower_ok = rec.null_principal == rec.null_col_block;
  rec.unit_upper_ok = rec.null_principal == rec.null_row_block;
  return rec;
}

template <class T>
ExistenceReport existence_report(const Matrix<T>& a,
                                 const ScalarField<T>& field) {
  require_square(a, "existence_report");
  if (a.rows() == 0) throw ShapeError("existence_report: empty matrix");
  ExistenceReport report;
  report.n = a.rows();
  report.general_exists = report.unit_lower_exists = report.unit_upper_exists =
      true;
  for (Index k = 1; k <= a.rows(); ++k) {
    const NullityRecord rec = nullity_record(a, k, field);
    report.general_exists = report.general_exists && rec.general_ok;
    report.unit_lower_exists = report.unit_lower_exists && rec.unit_lower_ok;
    report.unit_upper_exists = report.unit_upper_exists && rec.unit_upper_ok;
    report.per_k.push_back(rec);
  }
  if constexpr (!kIsExact<T>) report.relative_tolerance = field.relative_tolerance;
  return report;
}

template <class T>
std::optional<Index> first_violation(const Matrix<T>& a, Condition c,
                                     const ScalarField<T>& field) {
  require_square(a, "first_violation");
  for (Index k = 1; k <= a.rows(); ++k) {
    if (!nullity_record(a, k, field).ok(c)) return k;
  }
  return std::nullopt;
}

template <class T>
bool sylvester_nullity_check(const Matrix<T>& b, const Matrix<T>& c,
                             const ScalarField<T>& field) {
  require_square(b, "sylvester_nullity_check");
  require_square(c, "sylvester_nullity_check");
  if (b.rows() != c.rows()) {
    throw ShapeError("sylvester_nullity_check: size mismatch");
  }
  return nullity(matmul(b, c), field) <= nullity(b, field) + nullity(c, field);
}

#define GENLU_INSTANTIATE(T)                                                   \
  template Index rank(const Matrix<T>&, const ScalarField<T>&);                \
  template Index nullity(const Matrix<T>&, const ScalarField<T>&);             \
  template NullityRecord nullity_record(const Matrix<T>&, Index,               \
                                        const ScalarField<T>&);                \
  template ExistenceReport existence_report(const Matrix<T>&,                  \
                                            const ScalarField<T>&);            \
  template std::optional<Index> first_violation(const Matrix<T>&, Condition,   \
                                                const ScalarField<T>&);        \
  template bool sylvester_nullity_check(const Matrix<T>&, const Matrix<T>&,    \
                                        const ScalarField<T>&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
