/* Copyright 2026 The randsieve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the randsieve library.
 *
 * All heavyweight objects are opaque handles created and destroyed through
 * this interface. Functions that can fail return an rs_status; on failure
 * rs_last_error() yields a message (thread-local, valid until the next
 * failing call on the same thread) that names the offending parameter.
 * Output parameters are written only on RS_OK.
 */

#ifndef RANDSIEVE_H
#define RANDSIEVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERR_INVALID_ARGUMENT = 1,
  RS_ERR_OUT_OF_RANGE = 2,
  RS_ERR_RESOURCE_LIMIT = 3,
  RS_ERR_INTERNAL = 4
} rs_status;

const char* rs_status_name(rs_status status);
const char* rs_last_error(void);

/* ------------------------------------------------------------------ */
/* Prime table: primes <= limit with prefix sums of 1/p and 1/p^2.    */

typedef struct rs_prime_table rs_prime_table;

#define RS_DEFAULT_SIEVE_MAX 1000000000ull

rs_status rs_prime_table_create(uint64_t limit, rs_prime_table** out);
rs_status rs_prime_table_create_capped(uint64_t limit, uint64_t max_limit,
                                       rs_prime_table** out);
void rs_prime_table_destroy(rs_prime_table* table);

uint64_t rs_prime_table_limit(const rs_prime_table* table);
uint64_t rs_prime_table_count(const rs_prime_table* table);
rs_status rs_prime_table_at(const rs_prime_table* table, uint64_t index,
                            uint64_t* prime, double* recip_prefix,
                            double* recip_sq_prefix);

rs_status rs_reciprocal_sum(const rs_prime_table* table, uint64_t x,
                            double* out);
rs_status rs_prime_zeta_partial(const rs_prime_table* table, uint64_t x,
                                double* out);
rs_status rs_mertens_constant_estimate(const rs_prime_table* table, uint64_t x,
                                       double* out);

typedef struct rs_tail_report {
  uint64_t x0;
  uint64_t x1;
  double tail_sum;
  double expected_new_factors;
} rs_tail_report;

rs_status rs_tail_divergence_report(const rs_prime_table* table, uint64_t x0,
                                    uint64_t x1, rs_tail_report* out);

/* ------------------------------------------------------------------ */
/* Exact law of the factor count.                                      */

typedef struct rs_moment_report {
  uint64_t x;
  double mu;
  double sigma_sq;
  double loglog_x;
  double mertens_gap;
  double zeta_partial;
} rs_moment_report;

rs_status rs_exact_moments(const rs_prime_table* table, uint64_t x,
                           rs_moment_report* out);

typedef struct rs_pmf rs_pmf;

rs_status rs_default_support_cap(const rs_prime_table* table, uint64_t x,
                                 uint32_t* out);
rs_status rs_pmf_create(const rs_prime_table* table, uint64_t x,
                        uint32_t support_cap, rs_pmf** out);
void rs_pmf_destroy(rs_pmf* pmf);

uint64_t rs_pmf_x(const rs_pmf* pmf);
uint32_t rs_pmf_support_cap(const rs_pmf* pmf);
double rs_pmf_truncated_tail(const rs_pmf* pmf);
int rs_pmf_tail_warning(const rs_pmf* pmf);
/* Borrowed pointer to support_cap + 1 masses; lives as long as the pmf. */
const double* rs_pmf_mass(const rs_pmf* pmf, size_t* len);

rs_status rs_lindeberg_sum(const rs_prime_table* table, uint64_t x,
                           double epsilon, double* out);
double rs_normal_cdf(double z);
rs_status rs_ks_exact_vs_normal(const rs_pmf* pmf, double mu, double sigma,
                                double* out);

/* ------------------------------------------------------------------ */
/* Sampling.                                                           */

typedef struct rs_sample_batch rs_sample_batch;

/* threads == 0 uses all hardware threads; the draws are identical for any
 * thread count. */
rs_status rs_sample_omega(const rs_prime_table* table, uint64_t x,
                          uint64_t seed, uint64_t trials, uint64_t chunk_size,
                          uint32_t threads, rs_sample_batch** out);
void rs_sample_batch_destroy(rs_sample_batch* batch);

const uint32_t* rs_sample_batch_omegas(const rs_sample_batch* batch,
                                       size_t* len);
uint64_t rs_sample_batch_x(const rs_sample_batch* batch);
uint64_t rs_sample_batch_seed(const rs_sample_batch* batch);
uint64_t rs_sample_batch_chunk_size(const rs_sample_batch* batch);
uint64_t rs_sample_batch_chunk_count(const rs_sample_batch* batch);

/* The normalized values (omega - mu) / sigma, malloc'd; free with
 * rs_buffer_free. */
rs_status rs_normalize_batch(const rs_sample_batch* batch, double mu,
                             double sigma, double** out, size_t* len);

/* One realization of the truncated random integer. value receives a malloc'd
 * decimal string (free with rs_string_free); factors receives a malloc'd
 * array of the drawn primes (free with rs_u64_buffer_free). */
rs_status rs_sample_integer(const rs_prime_table* table, uint64_t x,
                            uint64_t seed, char** value, uint64_t** factors,
                            size_t* factor_count);

void rs_string_free(char* str);
void rs_u64_buffer_free(uint64_t* buf);
void rs_buffer_free(double* buf);

/* ------------------------------------------------------------------ */
/* Empirical statistics.                                               */

typedef struct rs_summary rs_summary;

rs_status rs_summarize(const rs_sample_batch* batch, rs_summary** out);
void rs_summary_destroy(rs_summary* summary);

uint64_t rs_summary_n(const rs_summary* summary);
double rs_summary_mean(const rs_summary* summary);
double rs_summary_variance(const rs_summary* summary);
size_t rs_summary_histogram_size(const rs_summary* summary);
rs_status rs_summary_histogram_entry(const rs_summary* summary, size_t index,
                                     uint32_t* omega, uint64_t* count);

/* KS distance between the raw draws of a batch and the exact law. */
rs_status rs_ks_batch_vs_pmf(const rs_sample_batch* batch, const rs_pmf* pmf,
                             double* out);
/* KS distance between arbitrary real samples and the standard normal. */
rs_status rs_ks_samples_vs_normal(const double* samples, size_t len,
                                  double* out);

/* ------------------------------------------------------------------ */
/* Census of the true factor-count function over 1..x.                 */

typedef struct rs_census rs_census;

#define RS_DEFAULT_CENSUS_CAP 100000000ull

/* cap == 0 uses RS_DEFAULT_CENSUS_CAP. */
rs_status rs_census_create(const rs_prime_table* table, uint64_t x,
                           uint64_t cap, uint32_t threads, rs_census** out);
void rs_census_destroy(rs_census* census);

uint64_t rs_census_x(const rs_census* census);
uint64_t rs_census_omega_total(const rs_census* census);
/* Borrowed pointer to counts[0..len-1]; counts[k] = #{n <= x : omega = k}. */
const uint64_t* rs_census_counts(const rs_census* census, size_t* len);

rs_status rs_ek_standardized_ks(const rs_prime_table* table,
                                const rs_census* census, uint32_t threads,
                                double* out);
/* Sorted standardized values for n in [16, x], malloc'd; free with
 * rs_buffer_free. */
rs_status rs_ek_standardized_samples(const rs_prime_table* table, uint64_t x,
                                     uint32_t threads, double** out,
                                     size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* RANDSIEVE_H */
