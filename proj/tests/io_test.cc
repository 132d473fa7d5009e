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

#include <gtest/gtest.h>

#include <filesystem>

#include "genlu/cli/commands.hpp"
#include "genlu/cli/interchange.hpp"
#include "genlu/cli/matrix_io.hpp"
#include "genlu/errors.hpp"
#include "genlu/matgen.hpp"

namespace genlu::cli {
namespace {

using Q = Rational;
using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("genlu_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

TEST(CsvTest, ParsesCommentsBlanksAndWhitespace) {
  const auto a = parse_csv<Q>("# header\n\n 1, -2/4 ,3\n0,0,7/1  # trailing\n\r\n");
  EXPECT_EQ(a, (Matrix<Q>{{1, Q(-1, 2), 3}, {0, 0, 7}}));
}

TEST(CsvTest, MalformedCellNamesRowAndColumn) {
  try {
    parse_csv<Q>("1,2\n# skip\n3,x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2);
    EXPECT_EQ(e.col(), 2);
    EXPECT_NE(std::string(e.what()).find("row 2, column 2"), std::string::npos);
  }
  EXPECT_THROW(parse_csv<Q>("1,2\n3\n"), ParseError);
  EXPECT_THROW(parse_csv<Q>("1.5\n"), ParseError);
  EXPECT_THROW(parse_csv<Q>("1,\n"), ParseError);
  EXPECT_THROW(parse_csv<Q>("1/0\n"), ParseError);
}

TEST(CsvTest, FloatAcceptsDecimalsAndFractions) {
  const auto a = parse_csv<double>("0.5,1/4\n-1e3,2\n");
  EXPECT_EQ(a, (Matrix<double>{{0.5, 0.25}, {-1000.0, 2.0}}));
}

TEST(CsvTest, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = gen({1 + static_cast<Index>(seed % 6), 0, seed, 5, Family::kRandom}).matrix;
    EXPECT_EQ(parse_csv<Q>(format_csv(a)), a);
    const auto d = convert<double>(a);
    EXPECT_EQ(parse_csv<double>(format_csv(d)), d);
  }
  const Matrix<double> awkward{{0.1, 1.0 / 3.0}, {-5e-324, 1.7976931348623157e308}};
  EXPECT_EQ(parse_csv<double>(format_csv(awkward)), awkward);
}

TEST(MatrixMarketTest, ParsesColumnMajor) {
  const auto a = parse_matrix_market(
      "%%MatrixMarket matrix array real general\n% comment\n2 3\n1\n4\n2\n5\n3\n6\n");
  EXPECT_EQ(a, (Matrix<double>{{1, 2, 3}, {4, 5, 6}}));
}

TEST(MatrixMarketTest, RoundTripIsBitExact) {
  const Matrix<double> a{{0.1, -2.5e-300}, {1.0 / 7.0, 0.0}, {6.02214076e23, -0.0}};
  const auto back = parse_matrix_market(format_matrix_market(a));
  ASSERT_EQ(back.rows(), 3);
  for (Index i = 1; i <= 3; ++i) {
    for (Index j = 1; j <= 2; ++j) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(back(i, j)), std::bit_cast<std::uint64_t>(a(i, j)));
    }
  }
}

TEST(MatrixMarketTest, Rejections) {
  EXPECT_THROW(parse_matrix_market("1 1\n1\n"), ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 1\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix array complex general\n1 1\n1 0\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix array real symmetric\n1 1\n1\n"),
               ParseError);
  EXPECT_THROW(parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n"),
               ParseError);
  try {
    parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\nz\n4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 1);
    EXPECT_EQ(e.col(), 2);
  }
}

TEST(MatrixFileTest, DetectionAndFiles) {
  TempDir dir;
  const Matrix<double> a{{1.5, 2}, {3, 4}};
  write_matrix(dir / "a.mtx", a, format_for_path(dir / "a.mtx"));
  EXPECT_EQ(format_for_path(dir / "a.mtx"), MatrixFormat::kMatrixMarketArray);
  EXPECT_EQ(format_for_path(dir / "a.csv"), MatrixFormat::kRationalCsv);
  EXPECT_EQ(read_matrix<double>(dir / "a.mtx"), a);
  EXPECT_THROW(read_matrix<Q>(dir / "a.mtx"), ParseError);
  EXPECT_THROW(write_matrix(dir / "b.mtx", Matrix<Q>{{1}}, MatrixFormat::kMatrixMarketArray),
               Error);

  const Matrix<Q> b{{Q(1, 3), 0}, {0, -7}};
  write_matrix(dir / "b.csv", b, MatrixFormat::kRationalCsv);
  EXPECT_EQ(read_matrix<Q>(dir / "b.csv"), b);
  EXPECT_THROW(read_matrix<Q>(dir / "missing.csv"), ParseError);
}

TEST(InterchangeTest, RoundTripRational) {
  const Matrix<Q> a{{0, 0, 0}, {0, 0, 1}, {0, Q(1, 2), 0}};
  const auto rec = factor_record(a, Mode::kGeneral);
  const json j = to_json(rec);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["field"], "rational");
  EXPECT_EQ(j["matrix"][2][1], "1/2");
  EXPECT_EQ(j["result"]["rank"], 2);
  EXPECT_TRUE(j["result"]["witness_k"].is_null());

  const auto back = record_from_json<Q>(json::parse(j.dump()));
  EXPECT_EQ(back.matrix, rec.matrix);
  EXPECT_EQ(back.L, rec.L);
  EXPECT_EQ(back.U, rec.U);
  EXPECT_EQ(back.rank, rec.rank);
  EXPECT_EQ(back.row_map, rec.row_map);
  EXPECT_EQ(back.col_map, rec.col_map);
  EXPECT_EQ(back.report, rec.report);
  EXPECT_EQ(to_json(back), j);
}

TEST(InterchangeTest, RoundTripFloatIsBitExact) {
  const Matrix<double> a{{0.1, 1.0 / 3.0}, {2.0 / 3.0, 1e-310}};
  const auto rec = factor_record(a, Mode::kFullPivot);
  const auto back = record_from_json<double>(json::parse(to_json(rec).dump()));
  EXPECT_EQ(back.matrix, a);
  EXPECT_EQ(back.L, rec.L);
  EXPECT_EQ(back.U, rec.U);
  EXPECT_EQ(back.mode, Mode::kFullPivot);
}

TEST(InterchangeTest, ZeroMatrixHasEmptyFactors) {
  const json j = to_json(factor_record(Matrix<Q>::zeros(2, 2), Mode::kGeneral));
  EXPECT_EQ(j["result"]["rank"], 0);
  EXPECT_EQ(j["result"]["U"], json::array());
  EXPECT_EQ(j["result"]["L"], json::parse("[[],[]]"));
  const auto back = record_from_json<Q>(j);
  EXPECT_EQ(back.L.rows(), 2);
  EXPECT_EQ(back.L.cols(), 0);
  EXPECT_EQ(back.U.rows(), 0);
  EXPECT_EQ(back.U.cols(), 2);
}

TEST(InterchangeTest, FailureRecord) {
  const json j = to_json(factor_record(Matrix<Q>{{0, 1}, {1, 0}}, Mode::kGeneral));
  EXPECT_FALSE(j["result"]["exists"].get<bool>());
  EXPECT_EQ(j["result"]["witness_k"], 1);
  const auto back = record_from_json<Q>(j);
  EXPECT_FALSE(back.exists);
  EXPECT_EQ(back.witness_k, 1);
}

TEST(InterchangeTest, SchemaViolations) {
  const json good = to_json(factor_record(Matrix<Q>{{1, 2}, {3, 4}}, Mode::kGeneral));
  auto broken = [&](auto mutate) {
    json j = good;
    mutate(j);
    return j;
  };
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["schema_version"] = "2"; })),
               SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j.erase("n"); })), SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["n"] = 3; })), SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["matrix"][0][0] = "2/2"; })),
               SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["matrix"][0][0] = 1; })), SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["matrix"][1] = json::array({"1"}); })),
               SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["result"]["row_map"] = {1, 1}; })),
               SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) { j["mode"] = "diagonal"; })), SchemaError);
  EXPECT_THROW(record_from_json<Q>(broken([](json& j) {
                 j["result"]["exists"] = false;
                 j["result"]["witness_k"] = nullptr;
               })),
               SchemaError);
  EXPECT_THROW(record_from_json<double>(good), SchemaError);
  EXPECT_THROW(record_field(broken([](json& j) { j["field"] = "int8"; })), SchemaError);
  EXPECT_THROW(parse_json("{not json"), SchemaError);
}

TEST(InterchangeTest, CertificateJson) {
  const Matrix<Q> a{{1, 2}, {3, 4}};
  auto rec = factor_record(a, Mode::kGeneral);
  rec.U(1, 2) = 9;
  const json c = certificate_to_json(verify_record(a, rec));
  EXPECT_FALSE(c["passed"].get<bool>());
  EXPECT_FALSE(c["reconstruct_ok"].get<bool>());
  ASSERT_FALSE(c["violations"].empty());
  EXPECT_EQ(c["violations"][0]["check"], "reconstruct");
  EXPECT_TRUE(c["violations"][0].contains("position"));
}

TEST(ModeTest, NamesRoundTrip) {
  for (Mode m : {Mode::kGeneral, Mode::kUnitLower, Mode::kUnitUpper, Mode::kPartialPivot,
                 Mode::kFullPivot}) {
    EXPECT_EQ(parse_mode(mode_name(m)), m);
  }
  EXPECT_EQ(parse_field("float64"), FieldKind::kFloat);
  EXPECT_EQ(parse_field("double"), std::nullopt);
}

}  // namespace
}  // namespace genlu::cli
