// Copyright 2026 The randsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/prime_table.hpp"

namespace randsieve::model {

/// One Monte Carlo experiment: `trials` independent draws of the factor
/// count at truncation bound x, partitioned into deterministic sub-streams
/// of `chunk_size` trials. The tuple (x, seed, trials, chunk_size) pins the
/// output bit for bit.
struct ModelParams {
  std::uint64_t x = 2;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::uint64_t chunk_size = 8192;

  void validate() const;
};

struct ChunkLayout {
  std::uint64_t chunk_size = 0;
  std::uint64_t chunk_count = 0;
};

struct SampleBatch {
  ModelParams params;
  std::vector<std::uint32_t> omegas;
  ChunkLayout provenance;
};

/// A single realization of the truncated random squarefree integer: the
/// drawn prime factors and their exact product.
struct RandomInteger {
  std::string value;                      // decimal, arbitrary precision
  std::vector<std::uint64_t> factor_set;  // ascending primes that were drawn
};

/// Integer construction is capped at this many candidate primes; factor-count
/// sampling has no such cap because it never forms the product.
inline constexpr std::uint64_t kMaxIntegerFactors = 1'000'000;

/// Draws params.trials factor counts. Each prime p <= x contributes 1 with
/// probability 1/p, decided by one uniform per prime per trial in ascending
/// prime order. Chunks may be executed by any number of worker threads
/// (threads == 0 means all hardware threads); the result is identical
/// regardless.
SampleBatch sample_omega(const primes::PrimeTable& table,
                         const ModelParams& params, unsigned threads = 0);

/// Draws one realization of the truncated random integer at bound x.
/// Requires x >= 2, x <= table.limit(), and at most kMaxIntegerFactors
/// candidate primes.
RandomInteger sample_integer(const primes::PrimeTable& table, std::uint64_t x,
                             std::uint64_t seed);

/// Builds the exact product of an explicit factor set (empty set gives "1").
RandomInteger integer_from_factors(std::span<const std::uint64_t> factors);

/// Elementwise (omega - mu) / sigma, order preserving. Requires sigma > 0.
std::vector<double> normalize_batch(const SampleBatch& batch, double mu,
                                    double sigma);

}  // namespace randsieve::model
