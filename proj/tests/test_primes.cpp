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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/prime_table.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using randsieve::Error;
using randsieve::ErrorCode;
using randsieve::primes::PrimeTable;
using randsieve::primes::sieve_primes;
using testsupport::table_upto;

TEST_CASE("sieve matches hand-enumerated small cases") {
  CHECK(sieve_primes(10).primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sieve_primes(1).primes().empty());
  CHECK(sieve_primes(0).primes().empty());
  CHECK(sieve_primes(2).primes() == std::vector<std::uint64_t>{2});
  CHECK(sieve_primes(3).primes() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("sieve equals trial division element for element") {
  for (std::uint64_t limit : {0ull, 1ull, 2ull, 17ull, 100ull, 1000ull, 65537ull,
                              100000ull}) {
    const PrimeTable table = sieve_primes(limit);
    const auto expected = oracle::trial_division_primes(limit);
    REQUIRE(table.primes().size() == expected.size());
    CHECK(table.primes() == expected);
    CHECK(table.limit() == limit);
  }
}

TEST_CASE("sieve of 100 finds 25 primes") {
  CHECK(sieve_primes(100).primes().size() ==
        oracle::trial_division_primes(100).size());
  CHECK(sieve_primes(100).primes().size() == 25);
}

TEST_CASE("sieve rejects limits above the configured maximum") {
  CHECK_THROWS_AS(sieve_primes(1001, 1000), Error);
  try {
    sieve_primes(1001, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resource_limit);
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }
}

TEST_CASE("prefix arrays are strictly increasing and step by 1/p") {
  const PrimeTable& table = table_upto(100000);
  const auto recip = table.recip_prefix();
  const auto recip_sq = table.recip_sq_prefix();
  REQUIRE(recip.size() == table.primes().size());
  REQUIRE(recip_sq.size() == table.primes().size());

  CHECK(recip[0] == 0.5);
  CHECK(recip_sq[0] == 0.25);
  for (std::size_t k = 1; k < table.primes().size(); ++k) {
    CHECK(recip[k] > recip[k - 1]);
    CHECK(recip_sq[k] > recip_sq[k - 1]);

    // Differences recover the term to ulp scale of the running sums.
    const double inv = 1.0 / static_cast<double>(table.primes()[k]);
    const double tol = 1e-15 * std::max(1.0, recip[k]);
    CHECK(std::abs((recip[k] - recip[k - 1]) - inv) <= tol);
    const double tol_sq = 1e-15 * std::max(1.0, recip_sq[k]);
    CHECK(std::abs((recip_sq[k] - recip_sq[k - 1]) - inv * inv) <= tol_sq);
  }
}

TEST_CASE("reciprocal_sum hand cases") {
  const PrimeTable& table = table_upto(1000);
  CHECK(table.reciprocal_sum(2) == 0.5);
  CHECK(table.reciprocal_sum(5) == doctest::Approx(31.0 / 30.0).epsilon(1e-15));
  CHECK(table.reciprocal_sum(1) == 0.0);
}

TEST_CASE("reciprocal_sum at 100 matches independent high-precision sum") {
  const PrimeTable& table = table_upto(1000);
  long double expected = 0.0L;
  for (std::uint64_t p : oracle::trial_division_primes(100)) {
    expected += 1.0L / static_cast<long double>(p);
  }
  CHECK(table.reciprocal_sum(100) ==
        doctest::Approx(static_cast<double>(expected)).epsilon(1e-14));
  // Four-decimal spot check of the derived constant.
  CHECK(std::abs(table.reciprocal_sum(100) - 1.8029) < 5e-5);
}

TEST_CASE("reciprocal sums are step functions jumping exactly at primes") {
  const PrimeTable& table = table_upto(1000);
  for (std::uint64_t x = 2; x <= 300; ++x) {
    const double before = table.reciprocal_sum(x - 1);
    const double at = table.reciprocal_sum(x);
    const double zeta_before = table.prime_zeta_partial(x - 1);
    const double zeta_at = table.prime_zeta_partial(x);
    if (oracle::is_prime_trial(x)) {
      CHECK(at > before);
      CHECK(zeta_at > zeta_before);
    } else {
      CHECK(at == before);
      CHECK(zeta_at == zeta_before);
    }
  }
}

TEST_CASE("queries past the table limit are rejected") {
  const PrimeTable table = sieve_primes(100);
  CHECK_THROWS_AS(table.reciprocal_sum(101), Error);
  CHECK_THROWS_AS(table.prime_zeta_partial(200), Error);
  try {
    table.reciprocal_sum(101);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
}

TEST_CASE("prime zeta partial hand cases and bound") {
  const PrimeTable& table = table_upto(1000000);
  CHECK(table.prime_zeta_partial(2) == 0.25);
  CHECK(table.prime_zeta_partial(5) ==
        doctest::Approx(0.25 + 1.0 / 9.0 + 1.0 / 25.0).epsilon(1e-15));
  // The paper's constant: partial sums approach 0.4522 from below.
  CHECK(std::abs(table.prime_zeta_partial(1000000) - 0.4522) < 5e-4);
  for (std::uint64_t x : {10ull, 100ull, 10000ull, 1000000ull}) {
    CHECK(table.prime_zeta_partial(x) < 0.46);
  }
}

TEST_CASE("mertens estimate: direct formula at x = 3") {
  const PrimeTable& table = table_upto(1000);
  const double expected = (0.5 + 1.0 / 3.0) - std::log(std::log(3.0));
  CHECK(table.mertens_constant_estimate(3) ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(table.mertens_constant_estimate(2), Error);
}

TEST_CASE("mertens estimates stabilize on the decade grid") {
  const PrimeTable& table = table_upto(10000000);

  // Independent summation route: descending-order long double accumulation.
  auto oracle_sum = [&](std::uint64_t x) {
    long double sum = 0.0L;
    const std::size_t k = table.count_leq(x);
    for (std::size_t i = k; i-- > 0;) {
      sum += 1.0L / static_cast<long double>(table.primes()[i]);
    }
    return static_cast<double>(sum);
  };

  std::vector<double> estimates;
  for (std::uint64_t x : {1000ull, 10000ull, 100000ull, 1000000ull, 10000000ull}) {
    CHECK(std::abs(table.reciprocal_sum(x) - oracle_sum(x)) < 1e-13);
    estimates.push_back(table.mertens_constant_estimate(x));
  }
  for (std::size_t i = 1; i + 1 < estimates.size(); ++i) {
    CHECK(std::abs(estimates[i + 1] - estimates[i]) <
          std::abs(estimates[i] - estimates[i - 1]));
  }
  CHECK(std::abs(estimates[4] - estimates[3]) < 0.01);
}

TEST_CASE("tail divergence report: hand case and identity") {
  const PrimeTable& table = table_upto(1000);
  const auto report = table.tail_divergence_report(1, 2);
  CHECK(report.tail_sum == 0.5);
  CHECK(report.expected_new_factors == report.tail_sum);
  CHECK(report.x0 == 1);
  CHECK(report.x1 == 2);

  const auto wide = table.tail_divergence_report(10, 500);
  CHECK(wide.tail_sum ==
        table.reciprocal_sum(500) - table.reciprocal_sum(10));

  CHECK_THROWS_AS(table.tail_divergence_report(5, 5), Error);
  CHECK_THROWS_AS(table.tail_divergence_report(7, 3), Error);
}

TEST_CASE("tail additivity over random triples") {
  const PrimeTable& table = table_upto(100000);
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::uint64_t> pick(1, 100000);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == b || b == c) continue;
    const double whole = table.tail_divergence_report(a, c).tail_sum;
    const double left = table.tail_divergence_report(a, b).tail_sum;
    const double right = table.tail_divergence_report(b, c).tail_sum;
    CHECK(std::abs(whole - (left + right)) <= 1e-12);
  }
}

TEST_CASE("tail reports over growing decades keep increasing") {
  const PrimeTable& table = table_upto(10000000);
  double previous = 0.0;
  for (std::uint64_t x1 : {100ull, 1000ull, 10000ull, 100000ull, 1000000ull,
                           10000000ull}) {
    const double tail = table.tail_divergence_report(1, x1).tail_sum;
    CHECK(tail > previous);
    previous = tail;
  }
}
