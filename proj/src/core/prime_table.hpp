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
#include <vector>

#include "core/error.hpp"

namespace randsieve::primes {

/// Sum of prime reciprocals over an interval (x0, x1]. The same number is
/// exposed twice: once as a plain partial sum of a divergent series, once as
/// the expected number of prime factors the model gains when the truncation
/// bound moves from x0 to x1.
struct TailDivergenceReport {
  std::uint64_t x0 = 0;
  std::uint64_t x1 = 0;
  double tail_sum = 0.0;
  double expected_new_factors = 0.0;
};

/// Immutable table of all primes <= limit with prefix sums of 1/p and 1/p^2.
///
/// The prefix sums are accumulated in ascending prime order with compensated
/// summation, so stored values are within one rounding of the exact sums of
/// the rounded terms. Queries binary-search the prime list; repeated
/// evaluations on an experiment grid cost O(log n) each. A completed table
/// is immutable and safe to share across threads.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultMaxLimit = 1'000'000'000;

  std::uint64_t limit() const noexcept { return limit_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::span<const double> recip_prefix() const noexcept { return recip_prefix_; }
  std::span<const double> recip_sq_prefix() const noexcept { return recip_sq_prefix_; }

  /// Number of primes <= x. Valid for any x (not range-checked).
  std::size_t count_leq(std::uint64_t x) const noexcept;

  /// Sum of 1/p over primes p <= x. Requires x <= limit().
  double reciprocal_sum(std::uint64_t x) const;

  /// Partial prime zeta sum: 1/p^2 over primes p <= x. Requires x <= limit().
  double prime_zeta_partial(std::uint64_t x) const;

  /// reciprocal_sum(x) - log log x, which stabilizes as x grows.
  /// Requires 3 <= x <= limit().
  double mertens_constant_estimate(std::uint64_t x) const;

  /// Sum of 1/p over x0 < p <= x1, computed as the exact difference of the
  /// two prefix queries. Requires x0 < x1 <= limit().
  TailDivergenceReport tail_divergence_report(std::uint64_t x0,
                                              std::uint64_t x1) const;

 private:
  friend PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t max_limit);

  void check_query_range(std::uint64_t x, const char* param) const;

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
  std::vector<double> recip_prefix_;
  std::vector<double> recip_sq_prefix_;
};

/// Builds the table with a segmented sieve of Eratosthenes (odd-only
/// storage). Deterministic. Fails with a resource-limit error naming the cap
/// when limit > max_limit.
PrimeTable sieve_primes(std::uint64_t limit,
                        std::uint64_t max_limit = PrimeTable::kDefaultMaxLimit);

}  // namespace randsieve::primes
