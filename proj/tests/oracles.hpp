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

// Independent reference implementations used to derive expected test values.
// Everything here is deliberately brute force and shares no code with the
// library paths it checks.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

inline std::uint32_t omega_trial(std::uint64_t n) {
  std::uint32_t count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ++count;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ++count;
  return count;
}

// Exact law of a sum of independent Bernoulli(q_i) by exhaustive enumeration
// of all 2^k outcomes. Feasible for k <= ~24.
inline std::vector<long double> enumerate_bernoulli_sum_pmf(
    const std::vector<long double>& probs) {
  const std::size_t k = probs.size();
  std::vector<long double> pmf(k + 1, 0.0L);
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    long double prob = 1.0L;
    for (std::size_t i = 0; i < k; ++i) {
      prob *= (mask >> i) & 1 ? probs[i] : 1.0L - probs[i];
    }
    pmf[std::popcount(mask)] += prob;
  }
  return pmf;
}

// Standard normal distribution function by composite Simpson quadrature of
// the density over [0, |z|]; error far below 1e-13 for |z| <= 8.
inline long double phi_quadrature(double z) {
  const long double kInvSqrt2Pi = 0.39894228040143267794L;
  auto density = [&](long double t) {
    return kInvSqrt2Pi * std::exp(-0.5L * t * t);
  };
  const long double a = 0.0L;
  const long double b = std::fabs(static_cast<long double>(z));
  const int n = 1 << 16;  // even
  const long double h = (b - a) / n;
  long double sum = density(a) + density(b);
  for (int i = 1; i < n; ++i) {
    sum += density(a + h * i) * (i % 2 == 1 ? 4.0L : 2.0L);
  }
  const long double integral = sum * h / 3.0L;
  return z >= 0 ? 0.5L + integral : 0.5L - integral;
}

// Inverse of a monotone CDF by bisection; used to plant samples at exact
// quantiles of whatever cdf is passed in.
template <typename Cdf>
double inverse_cdf_bisect(const Cdf& cdf, double p, double lo = -40.0,
                          double hi = 40.0) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
