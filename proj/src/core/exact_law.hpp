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

namespace randsieve::exact {

/// Exact first and second moments of the factor count at bound x, plus the
/// number-theoretic pieces they decompose into. sigma_sq is accumulated as
/// its own sum of per-prime variances, so `sigma_sq == mu - zeta_partial` is
/// a checkable identity rather than a definition.
struct MomentReport {
  std::uint64_t x = 0;
  double mu = 0.0;            // sum of 1/p over p <= x
  double sigma_sq = 0.0;      // sum of (1/p)(1 - 1/p)
  double loglog_x = 0.0;
  double mertens_gap = 0.0;   // mu - loglog_x
  double zeta_partial = 0.0;  // sum of 1/p^2
};

/// Exact probability mass function of the factor count on 0..support_cap.
/// Mass pushed past support_cap by the convolution accumulates in
/// truncated_tail; it is never renormalized away.
struct Pmf {
  std::uint64_t x = 0;
  std::uint32_t support_cap = 0;
  std::vector<double> mass;     // mass[k] = P(count == k), size support_cap+1
  double truncated_tail = 0.0;
  bool tail_warning = false;    // truncated_tail > 1e-9: cap chosen too small
};

/// Mean of the factor count (sum of 1/p). Defined for any x <= limit,
/// including x = 2 where the log log based report is unavailable.
double factor_count_mean(const primes::PrimeTable& table, std::uint64_t x);

/// Variance of the factor count: compensated sum of (1/p)(1 - 1/p).
double factor_count_variance(const primes::PrimeTable& table, std::uint64_t x);

/// Full moment report. Requires 3 <= x <= table.limit().
MomentReport exact_moments(const primes::PrimeTable& table, std::uint64_t x);

/// ceil(mu + 12 sigma + 30), clamped to the number of primes <= x. Keeps the
/// truncated tail far below 1e-12 at desk scales.
std::uint32_t default_support_cap(const primes::PrimeTable& table,
                                  std::uint64_t x);

/// Exact law of the factor count by iterative convolution over primes in
/// ascending order. Requires x <= table.limit() and support_cap >= 1.
Pmf poisson_binomial_pmf(const primes::PrimeTable& table, std::uint64_t x,
                         std::uint32_t support_cap);

/// Lindeberg functional of the centered per-prime variables at threshold
/// epsilon * sigma_x: the truncated second-moment sum divided by sigma_x^2.
/// Evaluates to exactly 0 when epsilon * sigma_x >= 1 (no summand can
/// exceed the threshold) and to exactly 1 when every summand does.
/// Requires 3 <= x <= table.limit() and epsilon > 0.
double lindeberg_sum(const primes::PrimeTable& table, std::uint64_t x,
                     double epsilon);

/// Standard normal distribution function, absolute error below 1e-10.
double normal_cdf(double z);

/// Kolmogorov-Smirnov distance between the step CDF of the standardized
/// factor count ((k - mu)/sigma with the pmf's masses) and the standard
/// normal, evaluating both sides of every jump. Requires sigma > 0 and
/// pmf.truncated_tail <= 1e-9.
double ks_exact_vs_normal(const Pmf& pmf, double mu, double sigma);

}  // namespace randsieve::exact
