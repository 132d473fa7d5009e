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

#include "genlu/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

namespace genlu {

ZeroTest<Rational> make_zero_test(const ScalarField<Rational>&, double) {
  return {};
}

ZeroTest<double> make_zero_test(const ScalarField<double>& field,
                                double scale) {
  return ZeroTest<double>(std::max(field.relative_tolerance * scale,
                                   std::numeric_limits<double>::min()));
}

std::string format_scalar(const Rational& x) {
  // get_str prints "p" when q == 1 and "p/q" otherwise.
  Rational canonical(x);
  canonical.canonicalize();
  return canonical.get_str();
}

std::string format_scalar(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

template <>
std::optional<Rational> parse_scalar<Rational>(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) return std::nullopt;
  if (slash != std::string_view::npos && !all_digits(den)) return std::nullopt;

  Rational q;
  mpz_class p(std::string(num), 10);
  if (negative) p = -p;
  if (slash == std::string_view::npos) {
    q = p;
  } else {
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    q = Rational(p, d);
    q.canonicalize();
  }
  return q;
}

template <>
std::optional<double> parse_scalar<double>(std::string_view text) {
  if (text.find('/') != std::string_view::npos) {
    auto q = parse_scalar<Rational>(text);
    if (!q) return std::nullopt;
    return q->get_d();
  }
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

namespace {

// Resolves a range against a dimension of size `extent`; returns the
// inclusive [first, last] with last = first - 1 for empty selections.
std::pair<Index, Index> resolve(Range r, Index extent) {
  const Index last = r.last == Range::kEnd ? extent : r.last;
  if (last < r.first) {
    if (r.first < 1 || r.first > extent + 1 || last < 0) {
      throw BoundsError("empty range outside matrix bounds");
    }
    return {r.first, r.first - 1};
  }
  if (r.first < 1 || last > extent) {
    throw BoundsError("range [" + std::to_string(r.first) + ", " +
                      std::to_string(last) + "] outside 1.." +
                      std::to_string(extent));
  }
  return {r.first, last};
}

}  // namespace

template <class T>
Matrix<T> submatrix(const Matrix<T>& a, Range rows, Range cols) {
  const auto [i, j] = resolve(rows, a.rows());
  const auto [k, l] = resolve(cols, a.cols());
  Matrix<T> out(j - i + 1, l - k + 1);
  for (Index r = i; r <= j; ++r) {
    for (Index c = k; c <= l; ++c) out(r - i + 1, c - k + 1) = a(r, c);
  }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index k = 1; k <= a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 1; j <= b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("add: shape mismatch");
  }
  Matrix<T> out = a;
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

template <class T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("subtract: shape mismatch");
  }
  Matrix<T> out = a;
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, const ScalarField<T>& field) {
  if (!a.square()) throw ShapeError("inverse: matrix is not square");
  const Index n = a.rows();
  const auto zero = make_zero_test(field, max_abs(a));
  Matrix<T> work = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (Index c = 1; c <= n; ++c) {
    Index pivot = 0;
    for (Index r = c; r <= n; ++r) {
      if (zero(work(r, c))) continue;
      if constexpr (kIsExact<T>) {
        pivot = r;
        break;
      } else if (pivot == 0 || magnitude(work(r, c)) > magnitude(work(pivot, c))) {
        pivot = r;
      }
    }
    if (pivot == 0) throw SingularMatrixError("inverse: matrix is singular");
    if (pivot != c) {
      for (Index j = 1; j <= n; ++j) {
        std::swap(work(c, j), work(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    const T p = work(c, c);
    for (Index j = 1; j <= n; ++j) {
      work(c, j) /= p;
      inv(c, j) /= p;
    }
    for (Index r = 1; r <= n; ++r) {
      if (r == c || work(r, c) == 0) continue;
      const T f = work(r, c);
      for (Index j = 1; j <= n; ++j) {
        work(r, j) -= f * work(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const T& x : a.entries()) m = std::max(m, magnitude(x));
  return m;
}

template <class T>
bool is_zero_matrix(const Matrix<T>& a, const ZeroTest<T>& zero) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [&](const T& x) { return zero(x); });
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& a) {
  os << '[';
  for (Index i = 1; i <= a.rows(); ++i) {
    os << (i == 1 ? "[" : ", [");
    for (Index j = 1; j <= a.cols(); ++j) {
      if (j > 1) os << ", ";
      os << format_scalar(a(i, j));
    }
    os << ']';
  }
  return os << ']' << " (" << a.rows() << 'x' << a.cols() << ')';
}

IndexMap::IndexMap(Index n) : images_(static_cast<std::size_t>(n)) {
  for (Index i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

bool IndexMap::is_permutation() const {
  std::vector<bool> seen(images_.size(), false);
  for (Index v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

bool IndexMap::is_identity() const {
  for (Index i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

IndexMap IndexMap::inverse() const {
  std::vector<Index> inv(images_.size());
  for (Index i = 1; i <= size(); ++i) {
    inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  }
  return IndexMap(std::move(inv));
}

template <class T>
Matrix<T> permute_rows(const Matrix<T>& a, const IndexMap& p) {
  if (p.size() != a.rows() || !p.is_permutation()) {
    throw ShapeError("permute_rows: map is not a permutation of the rows");
  }
  Matrix<T> out(a.rows(), a.cols());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(i, j) = a(p(i), j);
  }
  return out;
}

template <class T>
Matrix<T> permute_cols(const Matrix<T>& a, const IndexMap& q) {
  if (q.size() != a.cols() || !q.is_permutation()) {
    throw ShapeError("permute_cols: map is not a permutation of the columns");
  }
  Matrix<T> out(a.rows(), a.cols());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(i, j) = a(i, q(j));
  }
  return out;
}

#define GENLU_INSTANTIATE(T)                                                  \
  template Matrix<T> submatrix(const Matrix<T>&, Range, Range);              \
  template Matrix<T> transpose(const Matrix<T>&);                            \
  template Matrix<T> matmul(const Matrix<T>&, const Matrix<T>&);             \
  template Matrix<T> add(const Matrix<T>&, const Matrix<T>&);                \
  template Matrix<T> subtract(const Matrix<T>&, const Matrix<T>&);           \
  template Matrix<T> inverse(const Matrix<T>&, const ScalarField<T>&);       \
  template double max_abs(const Matrix<T>&);                                 \
  template bool is_zero_matrix(const Matrix<T>&, const ZeroTest<T>&);        \
  template std::ostream& operator<<(std::ostream&, const Matrix<T>&);        \
  template Matrix<T> permute_rows(const Matrix<T>&, const IndexMap&);        \
  template Matrix<T> permute_cols(const Matrix<T>&, const IndexMap&);

GENLU_INSTANTIATE(Rational)
GENLU_INSTANTIATE(double)

#undef GENLU_INSTANTIATE

}  // namespace genlu
