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

#include "core/omega_census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include "core/exact_law.hpp"

namespace randsieve::classical {

namespace {

constexpr std::uint64_t kSegmentSpan = 1u << 20;

// Writes omega(n) for every n in [lo, hi] into counters[n - lo].
void sieve_omega_segment(const primes::PrimeTable& table, std::uint64_t lo,
                         std::uint64_t hi, std::vector<std::uint8_t>& counters) {
  const std::size_t cells = static_cast<std::size_t>(hi - lo + 1);
  std::fill(counters.begin(), counters.begin() + cells, 0);
  for (std::uint64_t p : table.primes()) {
    if (p > hi) break;
    std::uint64_t m = std::max(p, ((lo + p - 1) / p) * p);
    for (; m <= hi; m += p) {
      ++counters[m - lo];
    }
  }
}

template <typename SegmentFn>
void for_each_segment(std::uint64_t x, unsigned threads, SegmentFn&& fn) {
  const std::uint64_t segment_count = (x + kSegmentSpan - 1) / kSegmentSpan;

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, segment_count));

  auto run = [&](std::uint64_t s, std::vector<std::uint8_t>& scratch,
                 unsigned worker) {
    const std::uint64_t lo = 1 + s * kSegmentSpan;
    const std::uint64_t hi = std::min(lo + kSegmentSpan - 1, x);
    fn(lo, hi, scratch, worker);
  };

  if (workers <= 1) {
    std::vector<std::uint8_t> scratch(kSegmentSpan);
    for (std::uint64_t s = 0; s < segment_count; ++s) run(s, scratch, 0);
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::vector<std::uint8_t> scratch(kSegmentSpan);
      for (;;) {
        const std::uint64_t s = next.fetch_add(1, std::memory_order_relaxed);
        if (s >= segment_count) return;
        run(s, scratch, w);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

OmegaCensus omega_census(const primes::PrimeTable& table, std::uint64_t x,
                         const CensusOptions& options) {
  if (x < 1) {
    throw_invalid("x: must be at least 1");
  }
  if (x > options.cap) {
    throw_resource_limit("x: " + std::to_string(x) +
                         " exceeds the census cap of " +
                         std::to_string(options.cap));
  }
  if (x > table.limit()) {
    throw_out_of_range("x: " + std::to_string(x) +
                       " exceeds the table limit of " +
                       std::to_string(table.limit()));
  }

  constexpr std::size_t kMaxOmega = 64;  // far above any attainable count
  struct PerWorker {
    std::array<std::uint64_t, kMaxOmega> hist{};
    std::uint64_t total = 0;
  };
  std::vector<PerWorker> partial(
      std::max(1u, options.threads != 0 ? options.threads
                                        : std::thread::hardware_concurrency()));

  for_each_segment(
      x, options.threads,
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& scratch,
          unsigned worker) {
        sieve_omega_segment(table, lo, hi, scratch);
        PerWorker& local = partial[worker % partial.size()];
        for (std::uint64_t n = lo; n <= hi; ++n) {
          const std::uint8_t k = scratch[n - lo];
          ++local.hist[k];
          local.total += k;
        }
      });

  OmegaCensus census;
  census.x = x;
  std::array<std::uint64_t, kMaxOmega> merged{};
  for (const PerWorker& part : partial) {
    census.omega_total += part.total;
    for (std::size_t k = 0; k < kMaxOmega; ++k) merged[k] += part.hist[k];
  }
  std::size_t top = kMaxOmega;
  while (top > 1 && merged[top - 1] == 0) --top;
  census.counts.assign(merged.begin(), merged.begin() + top);
  return census;
}

std::vector<double> ek_standardized_samples(const primes::PrimeTable& table,
                                            std::uint64_t x, unsigned threads) {
  constexpr std::uint64_t kFirstIncluded = 16;
  if (x < kFirstIncluded) {
    throw_invalid("x: must be at least 16 to standardize any term");
  }
  if (x > table.limit()) {
    throw_out_of_range("x: " + std::to_string(x) +
                       " exceeds the table limit of " +
                       std::to_string(table.limit()));
  }

  std::vector<double> values(x - kFirstIncluded + 1);
  for_each_segment(
      x, threads,
      [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint8_t>& scratch,
          unsigned) {
        if (hi < kFirstIncluded) return;
        sieve_omega_segment(table, lo, hi, scratch);
        for (std::uint64_t n = std::max(lo, kFirstIncluded); n <= hi; ++n) {
          const double loglog = std::log(std::log(static_cast<double>(n)));
          values[n - kFirstIncluded] =
              (static_cast<double>(scratch[n - lo]) - loglog) /
              std::sqrt(loglog);
        }
      });

  std::sort(values.begin(), values.end());
  return values;
}

double ek_standardized_ks(const primes::PrimeTable& table,
                          const OmegaCensus& census, unsigned threads) {
  if (census.x < 100) {
    throw_invalid("x: census must cover at least 1..100 for the standardized statistic");
  }

  const std::vector<double> values =
      ek_standardized_samples(table, census.x, threads);
  const double n = static_cast<double>(values.size());

  double distance = 0.0;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
    const double phi = exact::normal_cdf(values[i]);
    distance = std::max(distance, std::abs(phi - static_cast<double>(i) / n));
    distance =
        std::max(distance, std::abs(static_cast<double>(j + 1) / n - phi));
    i = j + 1;
  }
  return distance;
}

}  // namespace randsieve::classical
