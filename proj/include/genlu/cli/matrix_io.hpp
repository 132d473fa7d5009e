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

// Matrix file formats.
//
// RationalCSV: UTF-8 text, one matrix row per line, cells separated by
// commas. Cells are integers or "p/q" literals (float64 reads also accept
// decimal literals). Blank lines and anything after '#' are ignored.
//
// MatrixMarket array: the standard dense format
//   %%MatrixMarket matrix array real general
//   % comments
//   rows cols
//   a11
//   a21
//   ...            (column-major)
// Only read into, and written from, float64 matrices.

#ifndef GENLU_CLI_MATRIX_IO_HPP_
#define GENLU_CLI_MATRIX_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "genlu/matrix.hpp"

namespace genlu::cli {

enum class MatrixFormat { kRationalCsv, kMatrixMarketArray };

// ParseError carries the 1-based matrix row/column of a malformed cell.
template <class T>
Matrix<T> parse_csv(std::string_view text);
template <class T>
std::string format_csv(const Matrix<T>& a);

Matrix<double> parse_matrix_market(std::string_view text);
std::string format_matrix_market(const Matrix<double>& a);

// MatrixMarket if the text starts with the "%%MatrixMarket" banner.
MatrixFormat detect_format(std::string_view text);
// MatrixMarket for ".mtx", RationalCSV otherwise.
MatrixFormat format_for_path(const std::filesystem::path& path);

// Throws ParseError for unreadable or malformed files and for MatrixMarket
// input read as rationals.
template <class T>
Matrix<T> read_matrix(const std::filesystem::path& path);

// Throws Error if the file cannot be written or the format does not carry
// the scalar type.
template <class T>
void write_matrix(const std::filesystem::path& path, const Matrix<T>& a,
                  MatrixFormat format);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace genlu::cli

#endif  // GENLU_CLI_MATRIX_IO_HPP_
