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

#include "randsieve.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/empirical.hpp"
#include "core/exact_law.hpp"
#include "core/omega_census.hpp"
#include "core/prime_table.hpp"
#include "core/sampler.hpp"

struct rs_prime_table {
  randsieve::primes::PrimeTable impl;
};

struct rs_pmf {
  randsieve::exact::Pmf impl;
};

struct rs_sample_batch {
  randsieve::model::SampleBatch impl;
};

struct rs_summary {
  randsieve::stats::EmpiricalSummary impl;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;
};

struct rs_census {
  randsieve::classical::OmegaCensus impl;
};

namespace {

thread_local std::string g_last_error;

rs_status fail(rs_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
rs_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return RS_OK;
  } catch (const randsieve::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
      case randsieve::ErrorCode::invalid_argument:
        return RS_ERR_INVALID_ARGUMENT;
      case randsieve::ErrorCode::out_of_range:
        return RS_ERR_OUT_OF_RANGE;
      case randsieve::ErrorCode::resource_limit:
        return RS_ERR_RESOURCE_LIMIT;
    }
    return RS_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RS_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RS_ERR_INTERNAL;
  }
}

template <typename T>
T* malloc_copy(const std::vector<T>& values) {
  auto* buf = static_cast<T*>(std::malloc(values.size() * sizeof(T)));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, values.data(), values.size() * sizeof(T));
  return buf;
}

}  // namespace

extern "C" {

const char* rs_status_name(rs_status status) {
  switch (status) {
    case RS_OK: return "ok";
    case RS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RS_ERR_OUT_OF_RANGE: return "out of range";
    case RS_ERR_RESOURCE_LIMIT: return "resource limit";
    case RS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* rs_last_error(void) { return g_last_error.c_str(); }

/* ---------------- prime table ---------------- */

rs_status rs_prime_table_create(uint64_t limit, rs_prime_table** out) {
  return rs_prime_table_create_capped(limit, RS_DEFAULT_SIEVE_MAX, out);
}

rs_status rs_prime_table_create_capped(uint64_t limit, uint64_t max_limit,
                                       rs_prime_table** out) {
  if (out == nullptr) return fail(RS_ERR_INVALID_ARGUMENT, "out: null");
  return guarded([&] {
    auto table = std::make_unique<rs_prime_table>();
    table->impl = randsieve::primes::sieve_primes(limit, max_limit);
    *out = table.release();
  });
}

void rs_prime_table_destroy(rs_prime_table* table) { delete table; }

uint64_t rs_prime_table_limit(const rs_prime_table* table) {
  return table == nullptr ? 0 : table->impl.limit();
}

uint64_t rs_prime_table_count(const rs_prime_table* table) {
  return table == nullptr ? 0 : table->impl.primes().size();
}

rs_status rs_prime_table_at(const rs_prime_table* table, uint64_t index,
                            uint64_t* prime, double* recip_prefix,
                            double* recip_sq_prefix) {
  if (table == nullptr) return fail(RS_ERR_INVALID_ARGUMENT, "table: null");
  if (index >= table->impl.primes().size()) {
    return fail(RS_ERR_OUT_OF_RANGE, "index: past the last prime");
  }
  if (prime != nullptr) *prime = table->impl.primes()[index];
  if (recip_prefix != nullptr) *recip_prefix = table->impl.recip_prefix()[index];
  if (recip_sq_prefix != nullptr) {
    *recip_sq_prefix = table->impl.recip_sq_prefix()[index];
  }
  return RS_OK;
}

rs_status rs_reciprocal_sum(const rs_prime_table* table, uint64_t x,
                            double* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] { *out = table->impl.reciprocal_sum(x); });
}

rs_status rs_prime_zeta_partial(const rs_prime_table* table, uint64_t x,
                                double* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] { *out = table->impl.prime_zeta_partial(x); });
}

rs_status rs_mertens_constant_estimate(const rs_prime_table* table, uint64_t x,
                                       double* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] { *out = table->impl.mertens_constant_estimate(x); });
}

rs_status rs_tail_divergence_report(const rs_prime_table* table, uint64_t x0,
                                    uint64_t x1, rs_tail_report* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] {
    const auto report = table->impl.tail_divergence_report(x0, x1);
    out->x0 = report.x0;
    out->x1 = report.x1;
    out->tail_sum = report.tail_sum;
    out->expected_new_factors = report.expected_new_factors;
  });
}

/* ---------------- exact law ---------------- */

rs_status rs_exact_moments(const rs_prime_table* table, uint64_t x,
                           rs_moment_report* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] {
    const auto report = randsieve::exact::exact_moments(table->impl, x);
    out->x = report.x;
    out->mu = report.mu;
    out->sigma_sq = report.sigma_sq;
    out->loglog_x = report.loglog_x;
    out->mertens_gap = report.mertens_gap;
    out->zeta_partial = report.zeta_partial;
  });
}

rs_status rs_default_support_cap(const rs_prime_table* table, uint64_t x,
                                 uint32_t* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded(
      [&] { *out = randsieve::exact::default_support_cap(table->impl, x); });
}

rs_status rs_pmf_create(const rs_prime_table* table, uint64_t x,
                        uint32_t support_cap, rs_pmf** out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] {
    auto pmf = std::make_unique<rs_pmf>();
    pmf->impl = randsieve::exact::poisson_binomial_pmf(table->impl, x, support_cap);
    *out = pmf.release();
  });
}

void rs_pmf_destroy(rs_pmf* pmf) { delete pmf; }

uint64_t rs_pmf_x(const rs_pmf* pmf) { return pmf == nullptr ? 0 : pmf->impl.x; }

uint32_t rs_pmf_support_cap(const rs_pmf* pmf) {
  return pmf == nullptr ? 0 : pmf->impl.support_cap;
}

double rs_pmf_truncated_tail(const rs_pmf* pmf) {
  return pmf == nullptr ? 0.0 : pmf->impl.truncated_tail;
}

int rs_pmf_tail_warning(const rs_pmf* pmf) {
  return pmf != nullptr && pmf->impl.tail_warning ? 1 : 0;
}

const double* rs_pmf_mass(const rs_pmf* pmf, size_t* len) {
  if (pmf == nullptr) {
    if (len != nullptr) *len = 0;
    return nullptr;
  }
  if (len != nullptr) *len = pmf->impl.mass.size();
  return pmf->impl.mass.data();
}

rs_status rs_lindeberg_sum(const rs_prime_table* table, uint64_t x,
                           double epsilon, double* out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded(
      [&] { *out = randsieve::exact::lindeberg_sum(table->impl, x, epsilon); });
}

double rs_normal_cdf(double z) { return randsieve::exact::normal_cdf(z); }

rs_status rs_ks_exact_vs_normal(const rs_pmf* pmf, double mu, double sigma,
                                double* out) {
  if (pmf == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "pmf/out: null");
  }
  return guarded([&] {
    *out = randsieve::exact::ks_exact_vs_normal(pmf->impl, mu, sigma);
  });
}

/* ---------------- sampling ---------------- */

rs_status rs_sample_omega(const rs_prime_table* table, uint64_t x,
                          uint64_t seed, uint64_t trials, uint64_t chunk_size,
                          uint32_t threads, rs_sample_batch** out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] {
    randsieve::model::ModelParams params;
    params.x = x;
    params.seed = seed;
    params.trials = trials;
    params.chunk_size = chunk_size;
    auto batch = std::make_unique<rs_sample_batch>();
    batch->impl = randsieve::model::sample_omega(table->impl, params, threads);
    *out = batch.release();
  });
}

void rs_sample_batch_destroy(rs_sample_batch* batch) { delete batch; }

const uint32_t* rs_sample_batch_omegas(const rs_sample_batch* batch,
                                       size_t* len) {
  if (batch == nullptr) {
    if (len != nullptr) *len = 0;
    return nullptr;
  }
  if (len != nullptr) *len = batch->impl.omegas.size();
  return batch->impl.omegas.data();
}

uint64_t rs_sample_batch_x(const rs_sample_batch* batch) {
  return batch == nullptr ? 0 : batch->impl.params.x;
}

uint64_t rs_sample_batch_seed(const rs_sample_batch* batch) {
  return batch == nullptr ? 0 : batch->impl.params.seed;
}

uint64_t rs_sample_batch_chunk_size(const rs_sample_batch* batch) {
  return batch == nullptr ? 0 : batch->impl.provenance.chunk_size;
}

uint64_t rs_sample_batch_chunk_count(const rs_sample_batch* batch) {
  return batch == nullptr ? 0 : batch->impl.provenance.chunk_count;
}

rs_status rs_normalize_batch(const rs_sample_batch* batch, double mu,
                             double sigma, double** out, size_t* len) {
  if (batch == nullptr || out == nullptr || len == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "batch/out/len: null");
  }
  return guarded([&] {
    const auto values = randsieve::model::normalize_batch(batch->impl, mu, sigma);
    *out = malloc_copy(values);
    *len = values.size();
  });
}

rs_status rs_sample_integer(const rs_prime_table* table, uint64_t x,
                            uint64_t seed, char** value, uint64_t** factors,
                            size_t* factor_count) {
  if (table == nullptr || value == nullptr || factors == nullptr ||
      factor_count == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/value/factors: null");
  }
  return guarded([&] {
    const auto draw = randsieve::model::sample_integer(table->impl, x, seed);
    auto* str = static_cast<char*>(std::malloc(draw.value.size() + 1));
    if (str == nullptr) throw std::bad_alloc();
    std::memcpy(str, draw.value.c_str(), draw.value.size() + 1);
    *value = str;
    *factors = malloc_copy(draw.factor_set);
    *factor_count = draw.factor_set.size();
  });
}

void rs_string_free(char* str) { std::free(str); }
void rs_u64_buffer_free(uint64_t* buf) { std::free(buf); }
void rs_buffer_free(double* buf) { std::free(buf); }

/* ---------------- empirical statistics ---------------- */

rs_status rs_summarize(const rs_sample_batch* batch, rs_summary** out) {
  if (batch == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "batch/out: null");
  }
  return guarded([&] {
    auto summary = std::make_unique<rs_summary>();
    summary->impl = randsieve::stats::summarize(batch->impl);
    summary->entries.assign(summary->impl.histogram.begin(),
                            summary->impl.histogram.end());
    *out = summary.release();
  });
}

void rs_summary_destroy(rs_summary* summary) { delete summary; }

uint64_t rs_summary_n(const rs_summary* summary) {
  return summary == nullptr ? 0 : summary->impl.n;
}

double rs_summary_mean(const rs_summary* summary) {
  return summary == nullptr ? 0.0 : summary->impl.mean;
}

double rs_summary_variance(const rs_summary* summary) {
  return summary == nullptr ? 0.0 : summary->impl.variance;
}

size_t rs_summary_histogram_size(const rs_summary* summary) {
  return summary == nullptr ? 0 : summary->entries.size();
}

rs_status rs_summary_histogram_entry(const rs_summary* summary, size_t index,
                                     uint32_t* omega, uint64_t* count) {
  if (summary == nullptr) return fail(RS_ERR_INVALID_ARGUMENT, "summary: null");
  if (index >= summary->entries.size()) {
    return fail(RS_ERR_OUT_OF_RANGE, "index: past the last histogram entry");
  }
  if (omega != nullptr) *omega = summary->entries[index].first;
  if (count != nullptr) *count = summary->entries[index].second;
  return RS_OK;
}

rs_status rs_ks_batch_vs_pmf(const rs_sample_batch* batch, const rs_pmf* pmf,
                             double* out) {
  if (batch == nullptr || pmf == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "batch/pmf/out: null");
  }
  return guarded([&] {
    *out = randsieve::stats::ks_batch_vs_pmf(batch->impl, pmf->impl);
  });
}

rs_status rs_ks_samples_vs_normal(const double* samples, size_t len,
                                  double* out) {
  if (samples == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "samples/out: null");
  }
  return guarded([&] {
    *out = randsieve::stats::ks_empirical(std::span<const double>(samples, len),
                                          randsieve::stats::NormalCdf{});
  });
}

/* ---------------- census ---------------- */

rs_status rs_census_create(const rs_prime_table* table, uint64_t x,
                           uint64_t cap, uint32_t threads, rs_census** out) {
  if (table == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out: null");
  }
  return guarded([&] {
    randsieve::classical::CensusOptions options;
    options.cap = cap == 0 ? RS_DEFAULT_CENSUS_CAP : cap;
    options.threads = threads;
    auto census = std::make_unique<rs_census>();
    census->impl = randsieve::classical::omega_census(table->impl, x, options);
    *out = census.release();
  });
}

void rs_census_destroy(rs_census* census) { delete census; }

uint64_t rs_census_x(const rs_census* census) {
  return census == nullptr ? 0 : census->impl.x;
}

uint64_t rs_census_omega_total(const rs_census* census) {
  return census == nullptr ? 0 : census->impl.omega_total;
}

const uint64_t* rs_census_counts(const rs_census* census, size_t* len) {
  if (census == nullptr) {
    if (len != nullptr) *len = 0;
    return nullptr;
  }
  if (len != nullptr) *len = census->impl.counts.size();
  return census->impl.counts.data();
}

rs_status rs_ek_standardized_ks(const rs_prime_table* table,
                                const rs_census* census, uint32_t threads,
                                double* out) {
  if (table == nullptr || census == nullptr || out == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/census/out: null");
  }
  return guarded([&] {
    *out = randsieve::classical::ek_standardized_ks(table->impl, census->impl,
                                                    threads);
  });
}

rs_status rs_ek_standardized_samples(const rs_prime_table* table, uint64_t x,
                                     uint32_t threads, double** out,
                                     size_t* len) {
  if (table == nullptr || out == nullptr || len == nullptr) {
    return fail(RS_ERR_INVALID_ARGUMENT, "table/out/len: null");
  }
  return guarded([&] {
    const auto values =
        randsieve::classical::ek_standardized_samples(table->impl, x, threads);
    *out = malloc_copy(values);
    *len = values.size();
  });
}

}  // extern "C"
