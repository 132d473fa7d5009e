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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Timing limits are wall-clock and pinned below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "genlu/certify.hpp"
#include "genlu/cli/commands.hpp"
#include "genlu/cli/matrix_io.hpp"
#include "genlu/factor.hpp"
#include "genlu/matgen.hpp"
#include "genlu/oblique.hpp"
#include "genlu/rank.hpp"
#include "support/bridge.hpp"
#include "support/oracle.hpp"

namespace {

using genlu::Condition;
using genlu::Factorization;
using genlu::Family;
using genlu::Index;
using genlu::Matrix;
using genlu::NotFactorizable;
using genlu::Range;
using genlu::UnitFactorization;
using Q = genlu::Rational;
using Clock = std::chrono::steady_clock;
namespace oracle = genlu_test::oracle;

constexpr double kExampleLimitMs = 1.0;
constexpr double kEquivalenceLimitS = 60.0;
constexpr double kFullPivotLimitS = 30.0;
constexpr double kObliqueLimitS = 10.0;
constexpr double kStronglyNonsingularLimitS = 10.0;
constexpr int kEquivalenceCount = 1200;
constexpr int kFullPivotCount = 240;
constexpr int kObliqueCount = 120;
constexpr int kStronglyNonsingularCount = 120;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Best of several timed runs, in milliseconds.
double best_ms(const std::function<void()>& fn, int runs = 5) {
  double best = 1e300;
  for (int i = 0; i < runs; ++i) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, seconds_since(start) * 1e3);
  }
  return best;
}

int failures = 0;

void report(const std::string& name, const Outcome& o, const std::string& summary) {
  std::printf("%s  %-34s %s%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), summary.c_str(),
              o.pass ? "" : "  -- ", o.pass ? "" : o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* format, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

void antidiagonal_example() {
  Outcome o;
  const Matrix<Q> a{{0, 1}, {1, 0}};
  const auto outcome = genlu::lu_general(a);
  o.require(!genlu::succeeded(outcome), "factorization returned");
  if (!genlu::succeeded(outcome)) {
    o.require(std::get<NotFactorizable>(outcome).witness_k == 1, "witness differs from 1");
  }
  const double ms = best_ms([&] { (void)genlu::lu_general(a); });
  o.require(ms < kExampleLimitMs, "too slow");

  const auto path = std::filesystem::temp_directory_path() / "genlu_acceptance_2x2.csv";
  genlu::cli::write_matrix(path, a, genlu::cli::MatrixFormat::kRationalCsv);
  std::ostringstream out, err;
  const int status = genlu::cli::cmd_check(path, {}, out, err);
  std::filesystem::remove(path);
  o.require(status == genlu::cli::kExitNotFactorizable, "cmd_check exit " + std::to_string(status));
  report("2x2 antidiagonal example", o,
         fmt("witness k=1, cmd_check exit 1, %.4f ms (limit 1 ms)", ms));
}

void three_by_three_example() {
  Outcome o;
  const Matrix<Q> a{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  genlu::Certificate cert;
  Index r = -1;
  const double ms = best_ms([&] {
    const auto outcome = genlu::lu_general(a);
    if (!genlu::succeeded(outcome)) return;
    const auto& f = std::get<Factorization<Q>>(outcome);
    r = f.rank;
    cert = genlu::certify_general(a, f);
  });
  o.require(r == 2, "rank " + std::to_string(r));
  o.require(cert.passed(), "certificate failed");
  o.require(cert.sparsity_ok && cert.rank_revealing_ok, "sparsity/rank checks failed");
  o.require(cert.reconstruct_ok && cert.max_residual == 0.0, "L*U differs from A");
  o.require(ms < kExampleLimitMs, "too slow");
  report("3x3 rank-2 example", o,
         fmt("rank 2, certificate incl. sparsity passes, L*U == A exactly, %.4f ms", ms));
}

// Returns the suite used by the equivalence and rank criteria.
std::vector<Matrix<Q>> equivalence_suite(std::initializer_list<Family> families, int count,
                                         std::uint64_t seed_base) {
  const std::vector<Family> fams(families);
  std::vector<Matrix<Q>> out;
  for (int s = 0; s < count; ++s) {
    const Family f = fams[static_cast<std::size_t>(s) % fams.size()];
    Index n = 1 + (s / static_cast<int>(fams.size())) % 6;
    if (f == Family::kAntiDiagonalTrap && n < 2) n = 2;
    const Index r = static_cast<Index>((s * 7 + 3) % (n + 1));
    out.push_back(genlu::gen({n, r, seed_base + static_cast<std::uint64_t>(s), 3, f}).matrix);
  }
  return out;
}

std::vector<Matrix<Q>> general_suite() {
  return equivalence_suite({Family::kProductLU, Family::kBlockEmbed, Family::kAntiDiagonalTrap,
                            Family::kRandom},
                           kEquivalenceCount, 0);
}

std::vector<Matrix<Q>> unit_suite(bool transposed) {
  auto suite = equivalence_suite({Family::kUnitLowerFeasible, Family::kProductLU,
                                  Family::kAntiDiagonalTrap, Family::kRandom, Family::kBlockEmbed},
                                 kEquivalenceCount, 100000);
  if (transposed) {
    for (auto& a : suite) a = genlu::transpose(a);
  }
  return suite;
}

void existence_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  long checked = 0, discrepancies = 0, exists = 0, not_exists = 0;

  for (const auto& a : general_suite()) {
    const auto report = genlu::existence_report(a);
    const auto outcome = genlu::lu_general(a);
    const bool ok = genlu::succeeded(outcome);
    ++checked;
    (report.general_exists ? exists : not_exists)++;
    if (ok != report.general_exists) {
      ++discrepancies;
    } else if (ok) {
      const auto& f = std::get<Factorization<Q>>(outcome);
      if (genlu::matmul(f.L, f.U) != a) ++discrepancies;
    } else if (std::get<NotFactorizable>(outcome).witness_k !=
               report.witness(Condition::kGeneral)) {
      ++discrepancies;
    }
  }
  const std::pair<Condition, bool> kUnit[] = {{Condition::kUnitLower, false},
                                              {Condition::kUnitUpper, true}};
  for (const auto& [cond, transposed] : kUnit) {
    for (const auto& a : unit_suite(transposed)) {
      const auto report = genlu::existence_report(a);
      const auto outcome = cond == Condition::kUnitLower ? genlu::lu_unit_lower(a)
                                                         : genlu::lu_unit_upper(a);
      const bool ok = genlu::succeeded(outcome);
      ++checked;
      (report.exists(cond) ? exists : not_exists)++;
      if (ok != report.exists(cond)) {
        ++discrepancies;
      } else if (ok) {
        const auto& f = std::get<UnitFactorization<Q>>(outcome);
        if (genlu::matmul(f.L, f.U) != a) ++discrepancies;
      }
    }
  }
  const double s = seconds_since(start);
  o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.require(not_exists > 0 && exists > 0, "suite lacks positive or negative cases");
  o.require(s < kEquivalenceLimitS, "too slow");
  std::ostringstream summary;
  summary << checked << " matrices (" << exists << " factorizable, " << not_exists
          << " not), " << discrepancies << " discrepancies, " << fmt("%.2f s (limit 60 s)", s);
  report("existence equivalence", o, summary.str());
}

void rank_oracle() {
  Outcome o;
  long checked = 0, discrepancies = 0;
  std::vector<Matrix<Q>> all = general_suite();
  for (bool t : {false, true}) {
    auto u = unit_suite(t);
    all.insert(all.end(), u.begin(), u.end());
  }
  for (const auto& a : all) {
    if (a.rows() > 4) continue;
    ++checked;
    const Index r = genlu::rank(a);
    if (r != oracle::minor_rank(genlu_test::to_grid(a))) ++discrepancies;
    const auto outcome = genlu::lu_general(a);
    if (genlu::succeeded(outcome) && std::get<Factorization<Q>>(outcome).rank != r) {
      ++discrepancies;
    }
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.require(checked >= 100, "too few small matrices");
  report("rank vs minor enumeration (n<=4)", o,
         std::to_string(checked) + " matrices, " + std::to_string(discrepancies) +
             " discrepancies");
}

void full_pivot_baseline() {
  Outcome o;
  const auto start = Clock::now();
  long failures_here = 0;
  for (int s = 0; s < kFullPivotCount; ++s) {
    const Index m = 1 + s % 6;
    const Index n = 1 + (s / 6) % 6;
    const Index r = static_cast<Index>((s * 5 + 1) % (std::min(m, n) + 1));
    const auto a = genlu::gen_rectangular(m, n, r, 7000 + static_cast<std::uint64_t>(s));
    const auto f = genlu::lu_full_pivot(a);
    const auto paq = genlu::permute_cols(genlu::permute_rows(a, f.P), f.Q);
    bool ok = genlu::matmul(f.L, f.U) == paq;
    ok = ok && f.L.cols() == oracle::minor_rank(genlu_test::to_grid(a));
    // Schur complement of the leading r x r block of P A Q.
    const Index k = f.rank;
    if (ok && k < std::min(m, n) && k > 0) {
      const auto b11 = genlu::submatrix(paq, 1, k, 1, k);
      const auto schur = genlu::subtract(
          genlu::submatrix(paq, Range::from(k + 1), Range::from(k + 1)),
          genlu::matmul(genlu::matmul(genlu::submatrix(paq, Range::from(k + 1), Range::to(k)),
                                      genlu::inverse(b11)),
                        genlu::submatrix(paq, Range::to(k), Range::from(k + 1))));
      for (const Q& x : schur.entries()) ok = ok && x == 0;
    } else if (ok && k == 0) {
      for (const Q& x : a.entries()) ok = ok && x == 0;
    }
    if (!ok) ++failures_here;
  }
  const double s = seconds_since(start);
  o.require(failures_here == 0, std::to_string(failures_here) + " failures");
  o.require(s < kFullPivotLimitS, "too slow");
  report("full-pivot baseline", o,
         std::to_string(kFullPivotCount) + " rectangular matrices, " +
             std::to_string(failures_here) + " failures, " + fmt("%.2f s (limit 30 s)", s));
}

void oblique_suite() {
  Outcome o;
  const auto start = Clock::now();
  long failures_here = 0;
  for (int s = 0; s < kObliqueCount; ++s) {
    const Index n = 3 + s % 4;
    const Index k = 2 + s % (n - 2);
    auto a = genlu::gen({n, n, 9000 + static_cast<std::uint64_t>(s), 3, Family::kProductLU}).matrix;
    const Index j = k + s % (n - k + 1);
    for (Index i = 1; i <= n; ++i) {
      Q v = 0;
      for (Index c = 1; c < k; ++c) v += (Q(static_cast<long>(c + s % 3)) / 2) * a(i, c);
      a(i, j) = v;
    }
    const auto x = genlu::submatrix(a, Range::all(), Range::to(k - 1));
    const auto proj = genlu::leading_block_projector(x);
    bool ok = genlu::matmul(proj.P, proj.P) == proj.P;
    ok = ok && genlu::matmul(proj.P, x) == x;
    ok = ok && genlu::matmul(proj.complement(), x) == Matrix<Q>::zeros(n, k - 1);
    const auto state = genlu::schur_oblique_state(a, k);
    ok = ok && genlu::submatrix(state, Range::all(), Range{j - k + 1, j - k + 1}) ==
                   Matrix<Q>::zeros(n, 1);
    if (!ok) ++failures_here;
  }
  const double s = seconds_since(start);
  o.require(failures_here == 0, std::to_string(failures_here) + " failures");
  o.require(s < kObliqueLimitS, "too slow");
  report("oblique projection identities", o,
         std::to_string(kObliqueCount) + " instances, " + std::to_string(failures_here) +
             " failures, " + fmt("%.2f s (limit 10 s)", s));
}

void strongly_nonsingular() {
  Outcome o;
  const auto start = Clock::now();
  long failures_here = 0;
  for (int s = 0; s < kStronglyNonsingularCount; ++s) {
    const Index n = 1 + s % 6;
    const auto a = genlu::gen({n, n, 20000 + static_cast<std::uint64_t>(s), 3,
                               Family::kProductLU})
                       .matrix;
    const auto outcome = genlu::lu_general(a);
    bool ok = oracle::strongly_nonsingular(genlu_test::to_grid(a)) && genlu::succeeded(outcome);
    if (ok) {
      const auto& f = std::get<Factorization<Q>>(outcome);
      ok = f.rank == n && f.row_map.is_identity() && f.col_map.is_identity();
    }
    if (!ok) ++failures_here;
  }
  const double s = seconds_since(start);
  o.require(failures_here == 0, std::to_string(failures_here) + " failures");
  o.require(s < kStronglyNonsingularLimitS, "too slow");
  report("strongly non-singular regression", o,
         std::to_string(kStronglyNonsingularCount) + " matrices, identity maps and r = n, " +
             fmt("%.2f s (limit 10 s)", s));
}

void unit_lower_negative() {
  Outcome o;
  const auto outcome = genlu::lu_unit_lower(Matrix<Q>{{0, 0}, {1, 1}});
  o.require(!genlu::succeeded(outcome), "factorization returned");
  if (!genlu::succeeded(outcome)) {
    o.require(std::get<NotFactorizable>(outcome).witness_k == 1, "witness differs from 1");
  }
  report("unit-lower [[0,0],[1,1]]", o, "fails with witness k=1");
}

}  // namespace

int main() {
  antidiagonal_example();
  three_by_three_example();
  existence_equivalence();
  rank_oracle();
  full_pivot_baseline();
  oblique_suite();
  strongly_nonsingular();
  unit_lower_negative();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
