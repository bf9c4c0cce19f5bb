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

#include "core/prime_table.hpp"

#include <algorithm>
#include <cmath>

#include "core/compensated_sum.hpp"

namespace randsieve::primes {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd primes in [3, bound] by a plain sieve; bound is at most sqrt(limit),
// so the scratch array stays small.
std::vector<std::uint64_t> base_odd_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<std::uint8_t> composite(bound + 1, 0);
  for (std::uint64_t i = 3; i * i <= bound; i += 2) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = 1;
  }
  for (std::uint64_t i = 3; i <= bound; i += 2) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit, std::uint64_t max_limit) {
  if (limit > max_limit) {
    throw_resource_limit("limit: " + std::to_string(limit) +
                         " exceeds the configured sieve maximum of " +
                         std::to_string(max_limit));
  }

  PrimeTable table;
  table.limit_ = limit;

  CompensatedSum recip;
  CompensatedSum recip_sq;
  auto push_prime = [&](std::uint64_t p) {
    const double inv = 1.0 / static_cast<double>(p);
    recip.add(inv);
    recip_sq.add(inv * inv);
    table.primes_.push_back(p);
    table.recip_prefix_.push_back(recip.value());
    table.recip_sq_prefix_.push_back(recip_sq.value());
  };

  if (limit >= 2) push_prime(2);
  if (limit < 3) return table;

  const std::vector<std::uint64_t> base = base_odd_primes(isqrt_u64(limit));

  // Each segment spans kSegmentSpan consecutive integers; only odd values are
  // stored, one byte per candidate.
  constexpr std::uint64_t kSegmentSpan = 1u << 20;
  std::vector<std::uint8_t> composite(kSegmentSpan / 2);

  for (std::uint64_t low = 3; low <= limit; low += kSegmentSpan) {
    const std::uint64_t high = std::min(low + kSegmentSpan - 1, limit);
    const std::size_t cells = static_cast<std::size_t>((high - low) / 2) + 1;
    std::fill(composite.begin(), composite.begin() + cells, 0);

    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= high; m += 2 * p) {
        composite[(m - low) / 2] = 1;
      }
    }

    for (std::size_t i = 0; i < cells; ++i) {
      if (!composite[i]) push_prime(low + 2 * i);
    }
  }

  return table;
}

std::size_t PrimeTable::count_leq(std::uint64_t x) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

void PrimeTable::check_query_range(std::uint64_t x, const char* param) const {
  if (x > limit_) {
    throw_out_of_range(std::string(param) + ": " + std::to_string(x) +
                       " exceeds the table limit of " + std::to_string(limit_));
  }
}

double PrimeTable::reciprocal_sum(std::uint64_t x) const {
  check_query_range(x, "x");
  const std::size_t k = count_leq(x);
  return k == 0 ? 0.0 : recip_prefix_[k - 1];
}

double PrimeTable::prime_zeta_partial(std::uint64_t x) const {
  check_query_range(x, "x");
  const std::size_t k = count_leq(x);
  return k == 0 ? 0.0 : recip_sq_prefix_[k - 1];
}

double PrimeTable::mertens_constant_estimate(std::uint64_t x) const {
  if (x < 3) {
    throw_invalid("x: " + std::to_string(x) +
                  " is below 3; log log x is undefined or nonpositive");
  }
  check_query_range(x, "x");
  return reciprocal_sum(x) - std::log(std::log(static_cast<double>(x)));
}

TailDivergenceReport PrimeTable::tail_divergence_report(std::uint64_t x0,
                                                        std::uint64_t x1) const {
  if (x0 >= x1) {
    throw_invalid("x0: " + std::to_string(x0) + " must be below x1 (" +
                  std::to_string(x1) + ")");
  }
  check_query_range(x1, "x1");
  const double tail = reciprocal_sum(x1) - reciprocal_sum(x0);
  return TailDivergenceReport{x0, x1, tail, tail};
}

}  // namespace randsieve::primes
