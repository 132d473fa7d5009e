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

#include "genlu/cli/interchange.hpp"

#include <array>
#include <utility>

namespace genlu::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 5> kModes{{
    {Mode::kGeneral, "general"},
    {Mode::kUnitLower, "unit-lower"},
    {Mode::kUnitUpper, "unit-upper"},
    {Mode::kPartialPivot, "partial-pivot"},
    {Mode::kFullPivot, "full-pivot"},
}};

[[noreturn]] void schema_fail(const std::string& what) {
  throw SchemaError("interchange record: " + what);
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) schema_fail(std::string("expected object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(std::string("missing '") + key + "'");
  return *it;
}

Index natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    schema_fail(std::string("'") + what + "' must be a non-negative integer");
  }
  return static_cast<Index>(j.get<long long>());
}

template <class T>
json scalar_to_json(const T& x) {
  if constexpr (kIsExact<T>) {
    return format_scalar(x);
  } else {
    return x;
  }
}

template <class T>
T scalar_from_json(const json& j, const char* what) {
  if constexpr (kIsExact<T>) {
    if (!j.is_string()) schema_fail(std::string(what) + ": rational entries must be strings");
    const auto& s = j.get_ref<const std::string&>();
    auto q = parse_scalar<Rational>(s);
    if (!q || format_scalar(*q) != s) {
      schema_fail(std::string(what) + ": '" + s + "' is not a canonical rational");
    }
    return *q;
  } else {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
      if (auto v = parse_scalar<double>(j.get_ref<const std::string&>())) return *v;
    }
    schema_fail(std::string(what) + ": float64 entries must be numbers");
  }
}

template <class T>
json matrix_to_json(const Matrix<T>& a) {
  json rows = json::array();
  for (Index i = 1; i <= a.rows(); ++i) {
    json row = json::array();
    for (Index j = 1; j <= a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// `cols_if_empty` fixes the column count of a matrix with no rows.
template <class T>
Matrix<T> matrix_from_json(const json& j, const char* what, Index cols_if_empty) {
  if (!j.is_array()) schema_fail(std::string("'") + what + "' must be an array of rows");
  const Index m = static_cast<Index>(j.size());
  Index n = cols_if_empty;
  if (m > 0) {
    if (!j.front().is_array()) schema_fail(std::string("'") + what + "' rows must be arrays");
    n = static_cast<Index>(j.front().size());
  }
  Matrix<T> a(m, n);
  for (Index i = 1; i <= m; ++i) {
    const json& row = j[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      schema_fail(std::string("'") + what + "' is ragged at row " + std::to_string(i));
    }
    for (Index c = 1; c <= n; ++c) {
      a(i, c) = scalar_from_json<T>(row[static_cast<std::size_t>(c - 1)], what);
    }
  }
  return a;
}

json map_to_json(const IndexMap& p) { return json(p.images()); }

IndexMap map_from_json(const json& j, const char* what, Index size) {
  if (!j.is_array()) schema_fail(std::string("'") + what + "' must be an array");
  std::vector<Index> images;
  for (const json& x : j) images.push_back(natural(x, what));
  IndexMap p(std::move(images));
  if (p.size() != size || !p.is_permutation()) {
    schema_fail(std::string("'") + what + "' is not a permutation of 1.." + std::to_string(size));
  }
  return p;
}

}  // namespace

std::string_view mode_name(Mode mode) {
  for (const auto& [m, name] : kModes) {
    if (m == mode) return name;
  }
  return "general";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [m, n] : kModes) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::string_view field_name(FieldKind field) {
  return field == FieldKind::kExactRational ? "rational" : "float64";
}

std::optional<FieldKind> parse_field(std::string_view name) {
  if (name == "rational") return FieldKind::kExactRational;
  if (name == "float64") return FieldKind::kFloat;
  return std::nullopt;
}

template <class T>
json to_json(const InterchangeRecord<T>& record) {
  json result = {
      {"exists", record.exists},
      {"witness_k", record.witness_k ? json(*record.witness_k) : json(nullptr)},
      {"L", matrix_to_json(record.L)},
      {"U", matrix_to_json(record.U)},
      {"rank", record.rank ? json(*record.rank) : json(nullptr)},
      {"row_map", map_to_json(record.row_map)},
      {"col_map", map_to_json(record.col_map)},
  };
  json report = json::array();
  for (const NullityRecord& r : record.report) {
    report.push_back({{"k", r.k},
                      {"null_principal", r.null_principal},
                      {"null_col_block", r.null_col_block},
                      {"null_row_block", r.null_row_block},
                      {"general_ok", r.general_ok},
                      {"unit_lower_ok", r.unit_lower_ok},
                      {"unit_upper_ok", r.unit_upper_ok}});
  }
  return {
      {"schema_version", kSchemaVersion},
      {"n", record.matrix.rows()},
      {"field", field_name(kIsExact<T> ? FieldKind::kExactRational : FieldKind::kFloat)},
      {"mode", mode_name(record.mode)},
      {"matrix", matrix_to_json(record.matrix)},
      {"result", std::move(result)},
      {"report", std::move(report)},
  };
}

FieldKind record_field(const json& j) {
  const json& f = member(j, "field");
  if (!f.is_string()) schema_fail("'field' must be a string");
  auto field = parse_field(f.get<std::string>());
  if (!field) schema_fail("unknown field '" + f.get<std::string>() + "'");
  return *field;
}

template <class T>
InterchangeRecord<T> record_from_json(const json& j) {
  const json& version = member(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    schema_fail("unsupported schema_version");
  }
  const FieldKind expected = kIsExact<T> ? FieldKind::kExactRational : FieldKind::kFloat;
  if (record_field(j) != expected) schema_fail("field does not match the requested backend");

  InterchangeRecord<T> rec;
  if (auto it = j.find("mode"); it != j.end()) {
    if (!it->is_string()) schema_fail("'mode' must be a string");
    auto mode = parse_mode(it->get<std::string>());
    if (!mode) schema_fail("unknown mode '" + it->get<std::string>() + "'");
    rec.mode = *mode;
  }
  const Index n = natural(member(j, "n"), "n");
  rec.matrix = matrix_from_json<T>(member(j, "matrix"), "matrix", n);
  if (rec.matrix.rows() != n) schema_fail("'matrix' does not have n rows");
  const Index cols = rec.matrix.cols();

  const json& result = member(j, "result");
  const json& exists = member(result, "exists");
  if (!exists.is_boolean()) schema_fail("'exists' must be a boolean");
  rec.exists = exists.get<bool>();
  if (auto it = result.find("witness_k"); it != result.end() && !it->is_null()) {
    rec.witness_k = natural(*it, "witness_k");
  }
  if (auto it = result.find("rank"); it != result.end() && !it->is_null()) {
    rec.rank = natural(*it, "rank");
  }
  if (!rec.exists) {
    if (!rec.witness_k) schema_fail("a record with exists=false needs witness_k");
    rec.row_map = IndexMap(n);
    rec.col_map = IndexMap(cols);
  } else {
    rec.L = matrix_from_json<T>(member(result, "L"), "L", 0);
    if (rec.L.rows() == 0 && n > 0) schema_fail("'L' must have n rows");
    rec.U = matrix_from_json<T>(member(result, "U"), "U", cols);
    rec.row_map = map_from_json(member(result, "row_map"), "row_map", n);
    rec.col_map = map_from_json(member(result, "col_map"), "col_map", cols);
  }

  if (auto it = j.find("report"); it != j.end()) {
    if (!it->is_array()) schema_fail("'report' must be an array");
    for (const json& r : *it) {
      NullityRecord nr;
      nr.k = natural(member(r, "k"), "k");
      nr.null_principal = natural(member(r, "null_principal"), "null_principal");
      nr.null_col_block = natural(member(r, "null_col_block"), "null_col_block");
      nr.null_row_block = natural(member(r, "null_row_block"), "null_row_block");
      auto flag = [&](const char* key) {
        auto f = r.find(key);
        return f != r.end() && f->is_boolean() && f->get<bool>();
      };
      nr.general_ok = flag("general_ok");
      nr.unit_lower_ok = flag("unit_lower_ok");
      nr.unit_upper_ok = flag("unit_upper_ok");
      rec.report.push_back(nr);
    }
  }
  return rec;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

json certificate_to_json(const Certificate& cert) {
  json violations = json::array();
  for (const Violation& v : cert.violations) {
    json entry = {{"check", v.check}, {"detail", v.detail}};
    if (v.position) entry["position"] = {v.position->first, v.position->second};
    if (v.k) entry["k"] = *v.k;
    violations.push_back(std::move(entry));
  }
  json out = {
      {"passed", cert.passed()},
      {"reconstruct_ok", cert.reconstruct_ok},
      {"lower_tri_ok", cert.lower_tri_ok},
      {"upper_tri_ok", cert.upper_tri_ok},
      {"rank_revealing_ok", cert.rank_revealing_ok},
      {"sparsity_ok", cert.sparsity_ok},
      {"max_residual", cert.max_residual},
      {"violations", std::move(violations)},
  };
  if (cert.unit_diag_ok) out["unit_diag_ok"] = *cert.unit_diag_ok;
  if (cert.witness_ok) out["witness_ok"] = *cert.witness_ok;
  return out;
}

template json to_json(const InterchangeRecord<Rational>&);
template json to_json(const InterchangeRecord<double>&);
template InterchangeRecord<Rational> record_from_json<Rational>(const json&);
template InterchangeRecord<double> record_from_json<double>(const json&);

}  // namespace genlu::cli
