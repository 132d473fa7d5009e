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

// Seeded test-matrix generators.
//
// Every draw comes from SplitMix64 so the sequence can be replayed outside
// C++. Draw primitives, in terms of next() -> uint64:
//   uniform(lo, hi)   = lo + next() % (hi - lo + 1)
//   rational(b)       = p / q with p = uniform(-b, b), d = uniform(1, 2b),
//                       q = d if d <= b else b - d
//   nonzero(b)        = rational(b) with p = uniform(1, b) * (uniform(0, 1) ? -1 : 1)
//   sparse(b)         = uniform(0, 3) == 0 ? 0 : rational(b)
// Matrices are filled row-major over their structurally nonzero entries.
// Attempt c (0, 1, ...) seeds its generator with
//   seed XOR (c * 0xD1B54A32D192ED03)  (mod 2^64)
// and a draw is rejected when its rank differs from the requested one.

#ifndef GENLU_MATGEN_HPP_
#define GENLU_MATGEN_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "genlu/matrix.hpp"

namespace genlu {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

enum class Family {
  // L * U with random n x rank lower and rank x n upper factors.
  kProductLU,
  // [[0 0 0] [0 0 C] [0 B D]] around a factorizable core.
  kBlockEmbed,
  // [[0 1] [1 0]] embedded after a strongly non-singular leading block.
  kAntiDiagonalTrap,
  // L * U with L unit lower triangular.
  kUnitLowerFeasible,
  // Entries independently zero with probability 1/2, otherwise rational(b).
  kRandom,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  Index n = 1;
  Index rank = 0;
  std::uint64_t seed = 0;
  int entry_bound = 3;
  Family family = Family::kProductLU;
};

struct Generated {
  Matrix<Rational> matrix;
  // AntiDiagonalTrap: the smallest k at which the general condition fails.
  std::optional<Index> witness_k;
  // Number of rejected draws before acceptance.
  int rejected = 0;
};

// Throws SpecError for rank > n, n < 1, entry_bound < 1, or a trap with
// n < 2. ProductLU and UnitLowerFeasible hit `rank` exactly; BlockEmbed uses
// min(rank, core size) as the core's rank; AntiDiagonalTrap and Random ignore
// it.
Generated gen(const GenSpec& spec);

// rows x cols product of dense random factors with inner dimension `rank`,
// redrawn until the rank is exact.
Matrix<Rational> gen_rectangular(Index rows, Index cols, Index rank,
                                 std::uint64_t seed, int entry_bound = 3);

}  // namespace genlu

#endif  // GENLU_MATGEN_HPP_
