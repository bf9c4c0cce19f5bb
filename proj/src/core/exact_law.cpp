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

#include "core/exact_law.hpp"

#include <algorithm>
#include <cmath>

#include "core/compensated_sum.hpp"

namespace randsieve::exact {

namespace {

void check_x_in_table(const primes::PrimeTable& table, std::uint64_t x) {
  if (x > table.limit()) {
    throw_out_of_range("x: " + std::to_string(x) +
                       " exceeds the table limit of " +
                       std::to_string(table.limit()));
  }
}

void check_x_at_least_3(std::uint64_t x) {
  if (x < 3) {
    throw_invalid("x: " + std::to_string(x) +
                  " is below 3; log log x is undefined or nonpositive");
  }
}

}  // namespace

double factor_count_mean(const primes::PrimeTable& table, std::uint64_t x) {
  return table.reciprocal_sum(x);
}

double factor_count_variance(const primes::PrimeTable& table, std::uint64_t x) {
  check_x_in_table(table, x);
  const std::size_t n = table.count_leq(x);
  CompensatedSum var;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = 1.0 / static_cast<double>(table.primes()[i]);
    var.add(q * (1.0 - q));
  }
  return var.value();
}

MomentReport exact_moments(const primes::PrimeTable& table, std::uint64_t x) {
  check_x_at_least_3(x);
  check_x_in_table(table, x);

  MomentReport report;
  report.x = x;
  report.mu = table.reciprocal_sum(x);
  report.sigma_sq = factor_count_variance(table, x);
  report.loglog_x = std::log(std::log(static_cast<double>(x)));
  report.mertens_gap = report.mu - report.loglog_x;
  report.zeta_partial = table.prime_zeta_partial(x);
  return report;
}

std::uint32_t default_support_cap(const primes::PrimeTable& table,
                                  std::uint64_t x) {
  check_x_in_table(table, x);
  const double mu = factor_count_mean(table, x);
  const double sigma = std::sqrt(factor_count_variance(table, x));
  const auto cap = static_cast<std::uint64_t>(std::ceil(mu + 12.0 * sigma + 30.0));
  const std::uint64_t prime_count = table.count_leq(x);
  return static_cast<std::uint32_t>(
      std::max<std::uint64_t>(1, std::min(cap, prime_count)));
}

Pmf poisson_binomial_pmf(const primes::PrimeTable& table, std::uint64_t x,
                         std::uint32_t support_cap) {
  check_x_in_table(table, x);
  if (support_cap < 1) {
    throw_invalid("support_cap: must be at least 1");
  }

  const std::size_t n = table.count_leq(x);
  const std::size_t cap = support_cap;

  // One fold per prime: mass moves up one slot with probability 1/p. The DP
  // runs in extended precision; only the published masses are rounded.
  std::vector<long double> mass(cap + 1, 0.0L);
  mass[0] = 1.0L;
  long double tail = 0.0L;

  for (std::size_t i = 0; i < n; ++i) {
    const long double q = 1.0L / static_cast<long double>(table.primes()[i]);
    const long double keep = 1.0L - q;
    tail += mass[cap] * q;
    for (std::size_t k = cap; k >= 1; --k) {
      mass[k] = mass[k] * keep + mass[k - 1] * q;
    }
    mass[0] *= keep;
  }

  Pmf pmf;
  pmf.x = x;
  pmf.support_cap = support_cap;
  pmf.mass.resize(cap + 1);
  for (std::size_t k = 0; k <= cap; ++k) {
    pmf.mass[k] = static_cast<double>(mass[k]);
  }
  pmf.truncated_tail = static_cast<double>(tail);
  pmf.tail_warning = pmf.truncated_tail > 1e-9;
  return pmf;
}

double lindeberg_sum(const primes::PrimeTable& table, std::uint64_t x,
                     double epsilon) {
  check_x_at_least_3(x);
  check_x_in_table(table, x);
  if (!(epsilon > 0.0)) {
    throw_invalid("epsilon: must be > 0");
  }

  const std::size_t n = table.count_leq(x);

  CompensatedSum variance;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = 1.0 / static_cast<double>(table.primes()[i]);
    variance.add(q * (1.0 - q));
  }
  const double sigma_sq = variance.value();
  const double threshold = epsilon * std::sqrt(sigma_sq);

  // The centered variable takes value 1 - 1/p with probability 1/p and -1/p
  // otherwise. When both branches clear the threshold the contribution is the
  // full per-prime variance, written as q(1-q) so that an all-branches-active
  // numerator reproduces the denominator term for term (and the ratio is an
  // exact 1.0).
  CompensatedSum truncated;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = 1.0 / static_cast<double>(table.primes()[i]);
    const bool upper = (1.0 - q) > threshold;
    const bool lower = q > threshold;
    if (upper && lower) {
      truncated.add(q * (1.0 - q));
    } else if (upper) {
      truncated.add(q * (1.0 - q) * (1.0 - q));
    } else if (lower) {
      truncated.add((1.0 - q) * q * q);
    }
  }
  return truncated.value() / sigma_sq;
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.70710678118654752440);
}

double ks_exact_vs_normal(const Pmf& pmf, double mu, double sigma) {
  if (!(sigma > 0.0)) {
    throw_invalid("sigma: must be > 0");
  }
  if (pmf.truncated_tail > 1e-9) {
    throw_invalid("pmf: truncated_tail exceeds 1e-9; raise support_cap");
  }

  double distance = 0.0;
  long double cumulative = 0.0L;
  for (std::size_t k = 0; k < pmf.mass.size(); ++k) {
    const double z = (static_cast<double>(k) - mu) / sigma;
    const double phi = normal_cdf(z);
    distance = std::max(distance,
                        std::abs(phi - static_cast<double>(cumulative)));
    cumulative += pmf.mass[k];
    distance = std::max(distance,
                        std::abs(static_cast<double>(cumulative) - phi));
  }
  return distance;
}

}  // namespace randsieve::exact
