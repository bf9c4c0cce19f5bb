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
#include <vector>

#include "core/prime_table.hpp"

namespace randsieve::classical {

/// Frequency table of the distinct-prime-factor count over 1..x.
/// counts[k] is the number of n <= x with exactly k distinct prime factors
/// (n = 1 contributes to k = 0). omega_total is the exact integer sum of the
/// counts over all n, accumulated from the per-n counters and therefore an
/// independent route to the identity sum over primes of floor(x/p).
struct OmegaCensus {
  std::uint64_t x = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t omega_total = 0;
};

struct CensusOptions {
  std::uint64_t cap = 100'000'000;  // largest x the census will attempt
  unsigned threads = 0;             // 0 = all hardware threads
};

/// Census by incrementing a one-byte counter at every multiple of every
/// prime <= x, in cache-friendly segments. Segments may be processed in
/// parallel; the merged result equals the sequential one exactly.
/// Requires 1 <= x <= table.limit() and x <= options.cap.
OmegaCensus omega_census(const primes::PrimeTable& table, std::uint64_t x,
                         const CensusOptions& options = {});

/// Sorted values of (count - log log n) / sqrt(log log n) for 16 <= n <= x.
/// Smaller n are excluded from the standardized statistic (but kept in the
/// census) because the denominator degenerates there.
std::vector<double> ek_standardized_samples(const primes::PrimeTable& table,
                                            std::uint64_t x,
                                            unsigned threads = 0);

/// KS distance between the standardized per-n distribution and the standard
/// normal. Requires census.x >= 100.
double ek_standardized_ks(const primes::PrimeTable& table,
                          const OmegaCensus& census, unsigned threads = 0);

}  // namespace randsieve::classical
