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

#include "core/sampler.hpp"

#include <gmp.h>

#include <atomic>
#include <cstring>
#include <thread>

#include "core/counter_rng.hpp"

namespace randsieve::model {

namespace {

// Stream id reserved for single-integer draws, far outside any chunk index.
constexpr std::uint64_t kIntegerDrawStream = ~0ull;

void run_chunk(std::uint64_t seed, std::uint64_t chunk_index,
               std::span<const double> thresholds,
               std::span<std::uint32_t> out) {
  CounterStream stream(seed, chunk_index);
  const std::size_t prime_count = thresholds.size();
  for (auto& slot : out) {
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < prime_count; ++i) {
      count += stream.next_uniform() < thresholds[i];
    }
    slot = count;
  }
}

void balanced_product(mpz_t out, std::span<const std::uint64_t> factors) {
  if (factors.size() <= 8) {
    mpz_set_ui(out, 1);
    for (std::uint64_t p : factors) {
      mpz_mul_ui(out, out, static_cast<unsigned long>(p));
    }
    return;
  }
  const std::size_t mid = factors.size() / 2;
  mpz_t right;
  mpz_init(right);
  balanced_product(out, factors.first(mid));
  balanced_product(right, factors.subspan(mid));
  mpz_mul(out, out, right);
  mpz_clear(right);
}

}  // namespace

void ModelParams::validate() const {
  if (x < 2) {
    throw_invalid("x: " + std::to_string(x) +
                  " is below 2; the model needs at least one prime");
  }
  if (trials < 1) throw_invalid("trials: must be at least 1");
  if (chunk_size < 1) throw_invalid("chunk_size: must be at least 1");
}

SampleBatch sample_omega(const primes::PrimeTable& table,
                         const ModelParams& params, unsigned threads) {
  params.validate();
  if (params.x > table.limit()) {
    throw_out_of_range("x: " + std::to_string(params.x) +
                       " exceeds the table limit of " +
                       std::to_string(table.limit()));
  }

  const std::size_t prime_count = table.count_leq(params.x);
  std::vector<double> thresholds(prime_count);
  for (std::size_t i = 0; i < prime_count; ++i) {
    thresholds[i] = 1.0 / static_cast<double>(table.primes()[i]);
  }

  SampleBatch batch;
  batch.params = params;
  batch.omegas.resize(params.trials);
  const std::uint64_t chunk_count =
      (params.trials + params.chunk_size - 1) / params.chunk_size;
  batch.provenance = ChunkLayout{params.chunk_size, chunk_count};

  auto chunk_span = [&](std::uint64_t c) {
    const std::uint64_t offset = c * params.chunk_size;
    const std::uint64_t length =
        std::min(params.chunk_size, params.trials - offset);
    return std::span<std::uint32_t>(batch.omegas.data() + offset, length);
  };

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, chunk_count));

  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
      run_chunk(params.seed, c, thresholds, chunk_span(c));
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunk_count) return;
        run_chunk(params.seed, c, thresholds, chunk_span(c));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  return batch;
}

RandomInteger sample_integer(const primes::PrimeTable& table, std::uint64_t x,
                             std::uint64_t seed) {
  if (x < 2) {
    throw_invalid("x: " + std::to_string(x) +
                  " is below 2; the model needs at least one prime");
  }
  if (x > table.limit()) {
    throw_out_of_range("x: " + std::to_string(x) +
                       " exceeds the table limit of " +
                       std::to_string(table.limit()));
  }
  const std::size_t prime_count = table.count_leq(x);
  if (prime_count > kMaxIntegerFactors) {
    throw_resource_limit(
        "x: " + std::to_string(x) + " admits " + std::to_string(prime_count) +
        " candidate primes, above the integer-construction cap of " +
        std::to_string(kMaxIntegerFactors));
  }

  CounterStream stream(seed, kIntegerDrawStream);
  std::vector<std::uint64_t> factors;
  for (std::size_t i = 0; i < prime_count; ++i) {
    const std::uint64_t p = table.primes()[i];
    if (stream.next_uniform() < 1.0 / static_cast<double>(p)) {
      factors.push_back(p);
    }
  }
  return integer_from_factors(factors);
}

RandomInteger integer_from_factors(std::span<const std::uint64_t> factors) {
  mpz_t value;
  mpz_init(value);
  balanced_product(value, factors);

  char* str = mpz_get_str(nullptr, 10, value);
  RandomInteger result;
  result.value.assign(str);
  result.factor_set.assign(factors.begin(), factors.end());

  void (*free_fn)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(str, std::strlen(str) + 1);
  mpz_clear(value);
  return result;
}

std::vector<double> normalize_batch(const SampleBatch& batch, double mu,
                                    double sigma) {
  if (!(sigma > 0.0)) {
    throw_invalid("sigma: must be > 0");
  }
  std::vector<double> normalized;
  normalized.reserve(batch.omegas.size());
  for (std::uint32_t omega : batch.omegas) {
    normalized.push_back((static_cast<double>(omega) - mu) / sigma);
  }
  return normalized;
}

}  // namespace randsieve::model
