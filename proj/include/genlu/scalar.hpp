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

// Scalar fields supported by the library: exact rationals backed by GMP and
// IEEE doubles with a tolerance-gated zero test.

#ifndef GENLU_SCALAR_HPP_
#define GENLU_SCALAR_HPP_

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace genlu {

using Index = std::ptrdiff_t;
using Rational = mpq_class;

enum class FieldKind { kExactRational, kFloat };

template <class T>
struct ScalarField;

template <>
struct ScalarField<Rational> {
  static constexpr FieldKind kKind = FieldKind::kExactRational;
};

template <>
struct ScalarField<double> {
  static constexpr FieldKind kKind = FieldKind::kFloat;
  // Heuristic default: 2^-26 of the operand's largest absolute entry.
  static constexpr double kDefaultRelativeTolerance = 0x1p-26;

  double relative_tolerance = kDefaultRelativeTolerance;
};

template <class T>
inline constexpr bool kIsExact =
    ScalarField<T>::kKind == FieldKind::kExactRational;

// A field's is_zero predicate resolved against a concrete operand scale.
template <class T>
class ZeroTest;

template <>
class ZeroTest<Rational> {
 public:
  bool operator()(const Rational& x) const { return sgn(x) == 0; }
  bool ambiguous(const Rational&) const { return false; }
  double tolerance() const { return 0.0; }
};

template <>
class ZeroTest<double> {
 public:
  // Values within this factor of the threshold (either side) are flagged as
  // ambiguous classifications.
  static constexpr double kAmbiguityBand = 256.0;

  explicit ZeroTest(double tolerance) : tolerance_(tolerance) {}

  bool operator()(double x) const { return std::abs(x) <= tolerance_; }
  bool ambiguous(double x) const {
    const double a = std::abs(x);
    return a > tolerance_ / kAmbiguityBand && a <= tolerance_ * kAmbiguityBand;
  }
  double tolerance() const { return tolerance_; }

 private:
  double tolerance_;
};

// `scale` is the largest absolute entry of the operand; ignored by exact
// fields. The float threshold never drops below the smallest normal double so
// that zero_tolerance stays strictly positive.
ZeroTest<Rational> make_zero_test(const ScalarField<Rational>& field,
                                  double scale);
ZeroTest<double> make_zero_test(const ScalarField<double>& field,
                                double scale);

inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(double x) { return std::abs(x); }

// Canonical text: "p/q" reduced with q > 1, or "p" for integers.
std::string format_scalar(const Rational& x);
// Shortest decimal that round-trips to the same double.
std::string format_scalar(double x);

// Rational accepts [+-]digits or [+-]digits/digits with a nonzero
// denominator. Double additionally accepts any decimal literal. Returns
// nullopt on malformed text.
template <class T>
std::optional<T> parse_scalar(std::string_view text);

template <>
std::optional<Rational> parse_scalar<Rational>(std::string_view text);
template <>
std::optional<double> parse_scalar<double>(std::string_view text);

template <class To, class From>
To convert_scalar(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return x.get_d();
  } else {
    return Rational(x);  // exact binary expansion
  }
}

}  // namespace genlu

#endif  // GENLU_SCALAR_HPP_
