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

#include "genlu/cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "genlu/cli/matrix_io.hpp"
#include "genlu/factor.hpp"

namespace genlu::cli {

namespace {

using nlohmann::json;

struct Palette {
  bool on = false;
  std::string good(std::string_view s) const { return wrap("\x1b[32m", s); }
  std::string bad(std::string_view s) const { return wrap("\x1b[31m", s); }
  std::string wrap(const char* code, std::string_view s) const {
    return on ? code + std::string(s) + "\x1b[0m" : std::string(s);
  }
};

std::optional<Condition> condition_for(Mode mode) {
  switch (mode) {
    case Mode::kGeneral: return Condition::kGeneral;
    case Mode::kUnitLower: return Condition::kUnitLower;
    case Mode::kUnitUpper: return Condition::kUnitUpper;
    default: return std::nullopt;
  }
}

template <class T>
ScalarField<T> field_for(const RunOptions& options) {
  if constexpr (kIsExact<T>) {
    return {};
  } else {
    return ScalarField<double>{options.tol};
  }
}

// Dispatches `fn` on the scalar type selected by `field`.
template <class Fn>
int with_field(FieldKind field, Fn&& fn) {
  if (field == FieldKind::kExactRational) return fn(Rational{});
  return fn(double{});
}

void add_violation(Certificate& cert, bool& flag, std::string check, std::string detail) {
  flag = false;
  cert.violations.push_back({std::move(check), std::nullopt, std::nullopt, std::move(detail)});
}

template <class T>
int run_check(const std::filesystem::path& input, const RunOptions& options,
              std::ostream& out) {
  const Condition cond = *condition_for(options.mode);
  const Matrix<T> a = read_matrix<T>(input);
  if (!a.square() || a.empty()) {
    throw ShapeError("check needs a non-empty square matrix, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const ExistenceReport report = existence_report(a, field_for<T>(options));
  const Palette palette{options.color};

  out << std::left << std::setw(4) << "k" << std::setw(11) << "principal"
      << std::setw(11) << "col-block" << std::setw(11) << "row-block"
      << condition_name(cond) << "\n";
  for (const NullityRecord& r : report.per_k) {
    out << std::setw(4) << r.k << std::setw(11) << r.null_principal << std::setw(11)
        << r.null_col_block << std::setw(11) << r.null_row_block
        << (r.ok(cond) ? palette.good("ok") : palette.bad("fail")) << "\n";
  }
  if (report.relative_tolerance) {
    out << "zero tolerance (relative): " << format_scalar(*report.relative_tolerance) << "\n";
  }
  const std::string label = std::string(condition_name(cond)) + " LU: ";
  if (report.exists(cond)) {
    out << label << palette.good("exists") << "\n";
    return kExitOk;
  }
  out << label << palette.bad("does not exist") << " (witness k = " << *report.witness(cond)
      << ")\n";
  return kExitNotFactorizable;
}

template <class T>
int run_factor(const std::filesystem::path& input, const std::filesystem::path& out_path,
               const RunOptions& options, std::ostream& out) {
  const Matrix<T> a = read_matrix<T>(input);
  if (a.empty()) throw ShapeError("factor needs a non-empty matrix");
  const InterchangeRecord<T> rec = factor_record(a, options.mode, field_for<T>(options));
  const std::string text = to_json(rec).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
    out << mode_name(options.mode) << ": ";
    if (rec.exists) {
      out << "factorization written, rank " << rec.rank.value_or(0) << "\n";
    } else {
      out << "no factorization (witness k = " << rec.witness_k.value_or(0) << ")\n";
    }
  }
  return rec.exists ? kExitOk : kExitNotFactorizable;
}

template <class T>
int run_verify(const std::filesystem::path& matrix_path, const json& j,
               const std::filesystem::path& out_path, const RunOptions& options,
               std::ostream& out) {
  const InterchangeRecord<T> rec = record_from_json<T>(j);
  const Matrix<T> a = read_matrix<T>(matrix_path);
  const Certificate cert = verify_record(a, rec, field_for<T>(options));
  if (!out_path.empty()) write_text(out_path, certificate_to_json(cert).dump(2) + "\n");
  const Palette palette{options.color};
  out << "certificate: " << (cert.passed() ? palette.good("pass") : palette.bad("fail"))
      << "\n";
  for (const Violation& v : cert.violations) {
    out << "  " << v.check;
    if (v.position) out << " at (" << v.position->first << "," << v.position->second << ")";
    if (v.k) out << " k=" << *v.k;
    out << ": " << v.detail << "\n";
  }
  return cert.passed() ? kExitOk : kExitNotFactorizable;
}

template <class T>
bool reconstructs(const Matrix<T>& a, const Matrix<T>& product, double tol) {
  if (product.rows() != a.rows() || product.cols() != a.cols()) return false;
  if constexpr (kIsExact<T>) {
    return product == a;
  } else {
    const double bound =
        static_cast<double>(std::max<Index>(a.rows(), 1)) * tol * max_abs(a) * a.cols();
    return max_abs(subtract(product, a)) <= bound;
  }
}

// The matrix a record claims to factor, in the record's own coordinates.
template <class T>
bool record_reconstructs(const Matrix<T>& a, const InterchangeRecord<T>& rec, double tol) {
  if (rec.L.cols() != rec.U.rows()) return false;
  const Matrix<T> product = matmul(rec.L, rec.U);
  if (rec.mode == Mode::kPartialPivot || rec.mode == Mode::kFullPivot) {
    return reconstructs(permute_cols(permute_rows(a, rec.row_map), rec.col_map), product, tol);
  }
  return reconstructs(a, product, tol);
}

struct Tally {
  std::size_t both = 0, oracle_only = 0, engine_only = 0, neither = 0;
  std::size_t product_checked = 0, product_ok = 0;
  std::size_t witness_checked = 0, witness_ok = 0;
  std::vector<std::string> mismatches;
};

template <class T>
void xcheck_one(const std::filesystem::path& path, const json& j, const RunOptions& options,
                Tally& tally) {
  const InterchangeRecord<T> oracle = record_from_json<T>(j);
  const ScalarField<T> field = field_for<T>(options);
  const InterchangeRecord<T> engine = factor_record(oracle.matrix, oracle.mode, field);
  const std::string name = path.filename().string();
  if (oracle.exists && engine.exists) {
    ++tally.both;
    ++tally.product_checked;
    const bool ok = record_reconstructs(oracle.matrix, oracle, options.tol) &&
                    record_reconstructs(oracle.matrix, engine, options.tol);
    if (ok) {
      ++tally.product_ok;
    } else {
      tally.mismatches.push_back(name + ": products do not reconstruct the input");
    }
  } else if (oracle.exists) {
    ++tally.oracle_only;
    tally.mismatches.push_back(name + ": oracle factors, engine reports witness k = " +
                               std::to_string(engine.witness_k.value_or(0)));
  } else if (engine.exists) {
    ++tally.engine_only;
    tally.mismatches.push_back(name + ": engine factors, oracle reports none");
  } else {
    ++tally.neither;
    if (oracle.witness_k) {
      ++tally.witness_checked;
      if (oracle.witness_k == engine.witness_k) {
        ++tally.witness_ok;
      } else {
        tally.mismatches.push_back(name + ": witness " + std::to_string(*oracle.witness_k) +
                                   " vs " + std::to_string(engine.witness_k.value_or(0)));
      }
    }
  }
}

}  // namespace

bool color_from_env() {
  const char* v = std::getenv("LU_GENERAL_COLOR");
  if (v == nullptr) return false;
  const std::string s(v);
  return !(s.empty() || s == "0" || s == "never" || s == "false" || s == "no");
}

template <class T>
InterchangeRecord<T> factor_record(const Matrix<T>& a, Mode mode, const ScalarField<T>& field) {
  InterchangeRecord<T> rec;
  rec.mode = mode;
  rec.matrix = a;
  if (a.square() && !a.empty()) rec.report = existence_report(a, field).per_k;
  auto fill_failure = [&](const NotFactorizable& nf) {
    rec.exists = false;
    rec.witness_k = nf.witness_k;
    rec.row_map = IndexMap(a.rows());
    rec.col_map = IndexMap(a.cols());
  };
  switch (mode) {
    case Mode::kGeneral: {
      auto outcome = lu_general(a, field);
      if (auto* f = std::get_if<Factorization<T>>(&outcome)) {
        rec.exists = true;
        rec.L = f->L;
        rec.U = f->U;
        rec.rank = f->rank;
        rec.row_map = f->row_map;
        rec.col_map = f->col_map;
      } else {
        fill_failure(std::get<NotFactorizable>(outcome));
      }
      break;
    }
    case Mode::kUnitLower:
    case Mode::kUnitUpper: {
      auto outcome = mode == Mode::kUnitLower ? lu_unit_lower(a, field) : lu_unit_upper(a, field);
      if (auto* f = std::get_if<UnitFactorization<T>>(&outcome)) {
        rec.exists = true;
        rec.L = f->L;
        rec.U = f->U;
        rec.rank = genlu::rank(a, field);
        rec.row_map = f->row_map;
        rec.col_map = f->col_map;
      } else {
        fill_failure(std::get<NotFactorizable>(outcome));
      }
      break;
    }
    case Mode::kPartialPivot:
    case Mode::kFullPivot: {
      const PivotedFactorization<T> f =
          mode == Mode::kPartialPivot ? lu_partial_pivot(a, field) : lu_full_pivot(a, field);
      rec.exists = true;
      rec.L = f.L;
      rec.U = f.U;
      rec.rank = f.rank;
      rec.row_map = f.P;
      rec.col_map = f.Q;
      break;
    }
  }
  return rec;
}

template <class T>
Certificate verify_record(const Matrix<T>& a, const InterchangeRecord<T>& rec,
                          const ScalarField<T>& field) {
  if (a.rows() != rec.matrix.rows() || a.cols() != rec.matrix.cols()) {
    throw SchemaError("record is for a " + std::to_string(rec.matrix.rows()) + "x" +
                      std::to_string(rec.matrix.cols()) + " matrix, input is " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  Certificate cert;
  const auto cond = condition_for(rec.mode);
  if (!rec.exists) {
    if (!cond) {
      add_violation(cert, cert.reconstruct_ok, "exists",
                    std::string(mode_name(rec.mode)) + " factorizations always exist");
      return cert;
    }
    return certify_nonexistence(a, *cond, *rec.witness_k, field);
  }
  if (rec.mode == Mode::kGeneral) {
    Factorization<T> f{rec.L, rec.U, rec.L.cols(), rec.row_map, rec.col_map, false};
    cert = certify_general(a, f, field);
  } else if (rec.mode == Mode::kUnitLower || rec.mode == Mode::kUnitUpper) {
    UnitFactorization<T> f{rec.L, rec.U,
                           rec.mode == Mode::kUnitLower ? UnitSide::kLower : UnitSide::kUpper,
                           rec.row_map, rec.col_map, false};
    cert = certify_unit(a, f, field);
  } else {
    PivotedFactorization<T> f{rec.row_map, rec.col_map, rec.L, rec.U, rec.L.cols()};
    cert = certify_pivoted(a, f,
                           rec.mode == Mode::kPartialPivot ? PivotKind::kPartial
                                                           : PivotKind::kFull,
                           field);
  }
  if (rec.rank && rec.mode != Mode::kUnitLower && rec.mode != Mode::kUnitUpper &&
      *rec.rank != rec.L.cols()) {
    add_violation(cert, cert.rank_revealing_ok, "rank_field",
                  "rank " + std::to_string(*rec.rank) + " differs from the inner dimension " +
                      std::to_string(rec.L.cols()));
  }
  return cert;
}

int cmd_check(const std::filesystem::path& input, const RunOptions& options,
              std::ostream& out, std::ostream& err) {
  if (!condition_for(options.mode)) {
    err << "check: mode must be general, unit-lower or unit-upper\n";
    return kExitInputError;
  }
  try {
    return with_field(options.field, [&](auto tag) {
      return run_check<decltype(tag)>(input, options, out);
    });
  } catch (const Error& e) {
    err << "check: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_factor(const std::filesystem::path& input, const std::filesystem::path& out_path,
               const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    return with_field(options.field, [&](auto tag) {
      return run_factor<decltype(tag)>(input, out_path, options, out);
    });
  } catch (const Error& e) {
    err << "factor: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_verify(const std::filesystem::path& matrix, const std::filesystem::path& record,
               const std::filesystem::path& out_path, const RunOptions& options,
               std::ostream& out, std::ostream& err) {
  try {
    const json j = parse_json(read_text(record));
    return with_field(record_field(j), [&](auto tag) {
      return run_verify<decltype(tag)>(matrix, j, out_path, options, out);
    });
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_gen(const GenSpec& spec, FieldKind field, const std::filesystem::path& out_path,
            std::ostream& out, std::ostream& err) {
  try {
    const Generated g = gen(spec);
    std::ostringstream header;
    header << "genlu gen family=" << family_name(spec.family) << " n=" << spec.n
           << " rank=" << spec.rank << " seed=" << spec.seed << " bound=" << spec.entry_bound;
    if (g.witness_k) header << " witness_k=" << *g.witness_k;
    const MatrixFormat format =
        out_path.empty() ? MatrixFormat::kRationalCsv : format_for_path(out_path);
    std::string text;
    if (format == MatrixFormat::kMatrixMarketArray) {
      if (field != FieldKind::kFloat) {
        err << "gen: MatrixMarket output needs --field float64\n";
        return kExitInputError;
      }
      text = format_matrix_market(convert<double>(g.matrix));
      text.insert(text.find('\n') + 1, "% " + header.str() + "\n");
    } else {
      text = "# " + header.str() + "\n" +
             (field == FieldKind::kFloat ? format_csv(convert<double>(g.matrix))
                                         : format_csv(g.matrix));
    }
    if (out_path.empty()) {
      out << text;
    } else {
      write_text(out_path, text);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "gen: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_xcheck(const std::filesystem::path& dir, std::size_t count, std::uint64_t seed,
               const RunOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<std::filesystem::path> fixtures;
  std::error_code ec;
  if (std::filesystem::is_directory(dir, ec)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        fixtures.push_back(entry.path());
      }
    }
  }
  std::sort(fixtures.begin(), fixtures.end());
  if (fixtures.empty()) {
    err << "xcheck: no *.json fixtures in '" << dir.string() << "'\n";
    return kExitInputError;
  }
  if (count > fixtures.size()) {
    err << "xcheck: asked for " << count << " fixtures, found " << fixtures.size() << "\n";
    return kExitInputError;
  }
  if (count > 0 && count < fixtures.size()) {
    SplitMix64 rng(seed);
    for (std::size_t i = fixtures.size() - 1; i > 0; --i) {
      std::swap(fixtures[i], fixtures[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i)))]);
    }
    fixtures.resize(count);
    std::sort(fixtures.begin(), fixtures.end());
  }

  Tally tally;
  for (const auto& path : fixtures) {
    try {
      const json j = parse_json(read_text(path));
      with_field(record_field(j), [&](auto tag) {
        xcheck_one<decltype(tag)>(path, j, options, tally);
        return 0;
      });
    } catch (const Error& e) {
      err << "xcheck: " << path.filename().string() << ": " << e.what() << "\n";
      return kExitInputError;
    }
  }

  const Palette palette{options.color};
  const std::size_t total = fixtures.size();
  const std::size_t agree = tally.both + tally.neither;
  out << std::left << std::setw(16) << "" << std::setw(16) << "engine exists"
      << "engine none\n";
  out << std::setw(16) << "oracle exists" << std::setw(16) << tally.both << tally.oracle_only
      << "\n";
  out << std::setw(16) << "oracle none" << std::setw(16) << tally.engine_only << tally.neither
      << "\n";
  out << "verdict agreement: " << agree << "/" << total << "\n";
  out << "product agreement: " << tally.product_ok << "/" << tally.product_checked << "\n";
  if (tally.witness_checked > 0) {
    out << "witness agreement: " << tally.witness_ok << "/" << tally.witness_checked << "\n";
  }
  for (const std::string& m : tally.mismatches) out << "  " << m << "\n";
  const bool ok = tally.mismatches.empty();
  out << "xcheck: " << (ok ? palette.good("pass") : palette.bad("fail")) << "\n";
  return ok ? kExitOk : kExitNotFactorizable;
}

template InterchangeRecord<Rational> factor_record(const Matrix<Rational>&, Mode,
                                                   const ScalarField<Rational>&);
template InterchangeRecord<double> factor_record(const Matrix<double>&, Mode,
                                                 const ScalarField<double>&);
template Certificate verify_record(const Matrix<Rational>&, const InterchangeRecord<Rational>&,
                                   const ScalarField<Rational>&);
template Certificate verify_record(const Matrix<double>&, const InterchangeRecord<double>&,
                                   const ScalarField<double>&);

}  // namespace genlu::cli
