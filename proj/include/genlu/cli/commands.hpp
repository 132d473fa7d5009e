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

// The lu-general subcommands. Each returns a process exit status:
//   0  success, or the requested factorization exists
//   1  the factorization does not exist, or a check failed
//   2  usage or input error

#ifndef GENLU_CLI_COMMANDS_HPP_
#define GENLU_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "genlu/certify.hpp"
#include "genlu/cli/interchange.hpp"
#include "genlu/matgen.hpp"

namespace genlu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFactorizable = 1;
inline constexpr int kExitInputError = 2;

struct RunOptions {
  FieldKind field = FieldKind::kExactRational;
  double tol = ScalarField<double>{}.relative_tolerance;
  Mode mode = Mode::kGeneral;
  bool color = false;
};

// True when LU_GENERAL_COLOR asks for colored reports.
bool color_from_env();

// Runs the engine for `mode` and packages the outcome with the existence
// report (square input only).
template <class T>
InterchangeRecord<T> factor_record(const Matrix<T>& a, Mode mode,
                                   const ScalarField<T>& field = {});

// Certifies `record` against `a`. Throws SchemaError if the shapes differ.
template <class T>
Certificate verify_record(const Matrix<T>& a, const InterchangeRecord<T>& record,
                          const ScalarField<T>& field = {});

int cmd_check(const std::filesystem::path& input, const RunOptions& options,
              std::ostream& out, std::ostream& err);

// Writes the record to `out_path`, or to `out` when the path is empty.
int cmd_factor(const std::filesystem::path& input, const std::filesystem::path& out_path,
               const RunOptions& options, std::ostream& out, std::ostream& err);

// The field comes from the record. A non-empty `out_path` receives the
// certificate as JSON.
int cmd_verify(const std::filesystem::path& matrix, const std::filesystem::path& record,
               const std::filesystem::path& out_path, const RunOptions& options,
               std::ostream& out, std::ostream& err);

int cmd_gen(const GenSpec& spec, FieldKind field, const std::filesystem::path& out_path,
            std::ostream& out, std::ostream& err);

// Checks every *.json fixture in `dir` (or `count` of them, sampled by
// `seed`) against the engine.
int cmd_xcheck(const std::filesystem::path& dir, std::size_t count, std::uint64_t seed,
               const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace genlu::cli

#endif  // GENLU_CLI_COMMANDS_HPP_
