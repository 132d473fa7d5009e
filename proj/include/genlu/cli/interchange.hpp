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

// JSON interchange record (schema_version "1") shared with fixture
// generators and differential checkers.
//
//   {
//     "schema_version": "1",
//     "n": 3,
//     "field": "rational" | "float64",
//     "mode": "general",
//     "matrix": [["0","1/2"], ...] | [[0.0, 0.5], ...],
//     "result": {"exists": true, "witness_k": null, "L": [...], "U": [...],
//                "rank": 2, "row_map": [3,2,1], "col_map": [2,3,1]},
//     "report": [{"k": 1, "null_principal": 0, ...}, ...]
//   }
//
// Rationals are canonical "p/q" strings ("p" for integers). L of a rank-0
// general factorization is n empty rows and U is []. Index maps list the
// 1-based images (i -> map(i)).

#ifndef GENLU_CLI_INTERCHANGE_HPP_
#define GENLU_CLI_INTERCHANGE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "genlu/certify.hpp"
#include "genlu/matrix.hpp"
#include "genlu/rank.hpp"

namespace genlu::cli {

enum class Mode { kGeneral, kUnitLower, kUnitUpper, kPartialPivot, kFullPivot };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);
std::string_view field_name(FieldKind field);
std::optional<FieldKind> parse_field(std::string_view name);

inline constexpr std::string_view kSchemaVersion = "1";

template <class T>
struct InterchangeRecord {
  Mode mode = Mode::kGeneral;
  Matrix<T> matrix;
  bool exists = false;
  std::optional<Index> witness_k;
  Matrix<T> L;
  Matrix<T> U;
  std::optional<Index> rank;
  IndexMap row_map;
  IndexMap col_map;
  std::vector<NullityRecord> report;
};

template <class T>
nlohmann::json to_json(const InterchangeRecord<T>& record);

// Throws SchemaError on any structural or value violation.
template <class T>
InterchangeRecord<T> record_from_json(const nlohmann::json& j);

// The "field" of a parsed record; SchemaError if missing or unknown.
FieldKind record_field(const nlohmann::json& j);

nlohmann::json parse_json(std::string_view text);  // SchemaError
nlohmann::json certificate_to_json(const Certificate& cert);

}  // namespace genlu::cli

#endif  // GENLU_CLI_INTERCHANGE_HPP_
