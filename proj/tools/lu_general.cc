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

// lu-general: existence checks, factorizations, certificates, seeded test
// matrices and fixture cross-checks from the command line.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "genlu/cli/commands.hpp"

namespace {

using genlu::cli::Mode;
using genlu::cli::RunOptions;

const std::map<std::string, Mode> kModeMap{
    {"general", Mode::kGeneral},         {"unit-lower", Mode::kUnitLower},
    {"unit-upper", Mode::kUnitUpper},    {"partial-pivot", Mode::kPartialPivot},
    {"full-pivot", Mode::kFullPivot},
};
const std::map<std::string, genlu::FieldKind> kFieldMap{
    {"rational", genlu::FieldKind::kExactRational},
    {"float64", genlu::FieldKind::kFloat},
};
const std::map<std::string, genlu::Family> kFamilyMap{
    {"product-lu", genlu::Family::kProductLU},
    {"block-embed", genlu::Family::kBlockEmbed},
    {"anti-diagonal-trap", genlu::Family::kAntiDiagonalTrap},
    {"unit-lower-feasible", genlu::Family::kUnitLowerFeasible},
    {"random", genlu::Family::kRandom},
};

void add_field_options(CLI::App* cmd, RunOptions& options) {
  cmd->add_option("--field", options.field, "Scalar field: rational or float64")
      ->transform(CLI::CheckedTransformer(kFieldMap, CLI::ignore_case).description(""))
      ->option_text("{rational,float64}");
  cmd->add_option("--tol", options.tol, "Relative zero tolerance for float64")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized LU factorization without pivoting"};
  app.require_subcommand(1);

  RunOptions options;
  options.color = genlu::cli::color_from_env();
  std::string input, record, out, dir;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  genlu::GenSpec spec;
  genlu::FieldKind gen_field = genlu::FieldKind::kExactRational;

  auto* check = app.add_subcommand("check", "Report the existence conditions for each k");
  check->add_option("input", input, "Matrix file (RationalCSV or MatrixMarket)")->required();
  check->add_option("--mode", options.mode, "general, unit-lower or unit-upper")
      ->transform(CLI::CheckedTransformer(kModeMap, CLI::ignore_case).description(""))
      ->option_text("MODE");
  add_field_options(check, options);

  auto* factor = app.add_subcommand("factor", "Factor a matrix and write a JSON record");
  factor->add_option("input", input, "Matrix file")->required();
  factor->add_option("--mode", options.mode,
                     "general, unit-lower, unit-upper, partial-pivot or full-pivot")
      ->transform(CLI::CheckedTransformer(kModeMap, CLI::ignore_case).description(""))
      ->option_text("MODE");
  factor->add_option("--out", out, "Record path (stdout if omitted)");
  add_field_options(factor, options);

  auto* verify = app.add_subcommand("verify", "Certify a JSON record against a matrix");
  verify->add_option("matrix", input, "Matrix file")->required();
  verify->add_option("record", record, "Interchange record")->required();
  verify->add_option("--out", out, "Certificate JSON path");
  verify->add_option("--tol", options.tol, "Relative zero tolerance for float64")
      ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate a seeded test matrix");
  gen->add_option("--family", spec.family, "product-lu, block-embed, anti-diagonal-trap, unit-lower-feasible or random")
      ->transform(CLI::CheckedTransformer(kFamilyMap, CLI::ignore_case).description(""))
      ->option_text("FAMILY")
      ->required();
  gen->add_option("--n", spec.n, "Dimension")->required();
  gen->add_option("--rank", spec.rank, "Target rank (product-lu, block-embed, unit-lower-feasible)");
  gen->add_option("--seed", spec.seed, "Generator seed");
  gen->add_option("--bound", spec.entry_bound, "Entry numerator/denominator bound");
  gen->add_option("--field", gen_field, "Output field: rational or float64")
      ->transform(CLI::CheckedTransformer(kFieldMap, CLI::ignore_case).description(""))
      ->option_text("{rational,float64}");
  gen->add_option("--out", out, "Output path (.mtx for MatrixMarket; stdout if omitted)");

  auto* xcheck = app.add_subcommand("xcheck", "Cross-check a directory of JSON fixtures");
  xcheck->add_option("dir", dir, "Fixture directory")->required();
  xcheck->add_option("--count", count, "Number of fixtures to sample (0 = all)");
  xcheck->add_option("--seed", seed, "Sampling seed");
  xcheck->add_option("--tol", options.tol, "Relative zero tolerance for float64")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : genlu::cli::kExitInputError;
  }

  if (check->parsed()) return genlu::cli::cmd_check(input, options, std::cout, std::cerr);
  if (factor->parsed()) {
    return genlu::cli::cmd_factor(input, out, options, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return genlu::cli::cmd_verify(input, record, out, options, std::cout, std::cerr);
  }
  if (gen->parsed()) return genlu::cli::cmd_gen(spec, gen_field, out, std::cout, std::cerr);
  return genlu::cli::cmd_xcheck(dir, count, seed, options, std::cout, std::cerr);
}
