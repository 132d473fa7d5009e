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

#include "genlu/cli/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace genlu::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

template <class T>
Matrix<T> parse_csv(std::string_view text) {
  std::vector<std::vector<T>> rows;
  long line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    const long row = static_cast<long>(rows.size()) + 1;
    std::vector<T> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string_view cell = trim(line.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start));
      const long col = static_cast<long>(cells.size()) + 1;
      auto value = parse_scalar<T>(cell);
      if (!value) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed cell '" +
                             std::string(cell) + "' at row " + std::to_string(row) +
                             ", column " + std::to_string(col),
                         row, col);
      }
      cells.push_back(std::move(*value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && cells.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": row " +
                           std::to_string(row) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(rows.front().size()),
                       row, 0);
    }
    rows.push_back(std::move(cells));
  }
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.front().size());
  Matrix<T> a(m, n);
  for (Index i = 1; i <= m; ++i) {
    for (Index j = 1; j <= n; ++j) {
      a(i, j) = std::move(rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
    }
  }
  return a;
}

template <class T>
std::string format_csv(const Matrix<T>& a) {
  std::string out;
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) {
      if (j > 1) out += ',';
      out += format_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

Matrix<double> parse_matrix_market(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || trim(lines.front()).substr(0, 14) != "%%MatrixMarket") {
    throw ParseError("missing %%MatrixMarket banner");
  }
  std::istringstream banner{std::string(lines.front())};
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  if (lower(object) != "matrix" || lower(format) != "array") {
    throw ParseError("only the dense 'matrix array' MatrixMarket format is supported");
  }
  if (lower(field) != "real" && lower(field) != "integer" && lower(field) != "double") {
    throw ParseError("unsupported MatrixMarket field '" + field + "'");
  }
  if (lower(symmetry) != "general") {
    throw ParseError("unsupported MatrixMarket symmetry '" + symmetry + "'");
  }

  std::vector<std::string_view> tokens;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::string_view line = trim(lines[l]);
    if (line.empty() || line.front() == '%') continue;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto begin = line.find_first_not_of(" \t", pos);
      if (begin == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", begin);
      if (end == std::string_view::npos) end = line.size();
      tokens.push_back(line.substr(begin, end - begin));
      pos = end;
    }
  }
  if (tokens.size() < 2) throw ParseError("missing MatrixMarket size line");
  auto dim = [](std::string_view s) -> Index {
    auto q = parse_scalar<Rational>(s);
    if (!q || q->get_den() != 1 || *q < 0) {
      throw ParseError("bad MatrixMarket dimension '" + std::string(s) + "'");
    }
    return q->get_num().get_si();
  };
  const Index m = dim(tokens[0]);
  const Index n = dim(tokens[1]);
  if (static_cast<Index>(tokens.size()) - 2 != m * n) {
    throw ParseError("expected " + std::to_string(m * n) + " MatrixMarket values, found " +
                     std::to_string(tokens.size() - 2));
  }
  Matrix<double> a(m, n);
  std::size_t t = 2;
  for (Index j = 1; j <= n; ++j) {
    for (Index i = 1; i <= m; ++i, ++t) {
      auto v = parse_scalar<double>(tokens[t]);
      if (!v) {
        throw ParseError("malformed value '" + std::string(tokens[t]) + "' at row " +
                             std::to_string(i) + ", column " + std::to_string(j),
                         i, j);
      }
      a(i, j) = *v;
    }
  }
  return a;
}

std::string format_matrix_market(const Matrix<double>& a) {
  std::string out = "%%MatrixMarket matrix array real general\n";
  out += std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (Index j = 1; j <= a.cols(); ++j) {
    for (Index i = 1; i <= a.rows(); ++i) out += format_scalar(a(i, j)) + "\n";
  }
  return out;
}

MatrixFormat detect_format(std::string_view text) {
  return trim(text).substr(0, 14) == "%%MatrixMarket" ? MatrixFormat::kMatrixMarketArray
                                                      : MatrixFormat::kRationalCsv;
}

MatrixFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".mtx" ? MatrixFormat::kMatrixMarketArray
                                    : MatrixFormat::kRationalCsv;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

template <class T>
Matrix<T> read_matrix(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (detect_format(text) == MatrixFormat::kMatrixMarketArray) {
    if constexpr (kIsExact<T>) {
      throw ParseError("MatrixMarket files carry floats; read them with the float64 field");
    } else {
      return parse_matrix_market(text);
    }
  }
  return parse_csv<T>(text);
}

template <class T>
void write_matrix(const std::filesystem::path& path, const Matrix<T>& a,
                  MatrixFormat format) {
  if (format == MatrixFormat::kMatrixMarketArray) {
    if constexpr (kIsExact<T>) {
      throw Error("rational matrices are written as RationalCSV only");
    } else {
      write_text(path, format_matrix_market(a));
    }
    return;
  }
  write_text(path, format_csv(a));
}

template Matrix<Rational> parse_csv<Rational>(std::string_view);
template Matrix<double> parse_csv<double>(std::string_view);
template std::string format_csv(const Matrix<Rational>&);
template std::string format_csv(const Matrix<double>&);
template Matrix<Rational> read_matrix<Rational>(const std::filesystem::path&);
template Matrix<double> read_matrix<double>(const std::filesystem::path&);
template void write_matrix(const std::filesystem::path&, const Matrix<Rational>&, MatrixFormat);
template void write_matrix(const std::filesystem::path&, const Matrix<double>&, MatrixFormat);

}  // namespace genlu::cli
