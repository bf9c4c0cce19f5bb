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
#include <map>
#include <optional>
#include <span>

#include "core/distribution.hpp"
#include "core/sampler.hpp"

namespace randsieve::stats {

struct EmpiricalSummary {
  std::uint64_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single observation
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::optional<double> ks_vs_normal;
  std::optional<double> ks_vs_exact;
};

/// Mean, unbiased variance, and integer histogram of the raw draws.
/// Requires a nonempty batch.
EmpiricalSummary summarize(const model::SampleBatch& batch);

/// sup_t |F_emp(t) - dist(t)| for the empirical CDF of `samples`, taking
/// both sides of every jump of either function. Samples are copied and
/// sorted internally. Requires nonempty samples.
double ks_empirical(std::span<const double> samples,
                    const DistributionFunction& dist);

/// KS distance between the raw integer draws of a batch and the exact law.
double ks_batch_vs_pmf(const model::SampleBatch& batch, const exact::Pmf& pmf);

}  // namespace randsieve::stats
