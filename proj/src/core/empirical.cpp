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

#include "core/empirical.hpp"

#include <algorithm>
#include <cmath>

#include "core/compensated_sum.hpp"

namespace randsieve::stats {

StepCdf::StepCdf(std::vector<double> points, std::vector<double> levels)
    : points_(std::move(points)), levels_(std::move(levels)) {
  if (points_.size() != levels_.size()) {
    throw_invalid("levels: must have one level per jump point");
  }
  if (!std::is_sorted(points_.begin(), points_.end())) {
    throw_invalid("points: must be sorted");
  }
}

StepCdf StepCdf::from_pmf(const exact::Pmf& pmf) {
  std::vector<double> points(pmf.mass.size());
  std::vector<double> levels(pmf.mass.size());
  long double cumulative = 0.0L;
  for (std::size_t k = 0; k < pmf.mass.size(); ++k) {
    points[k] = static_cast<double>(k);
    cumulative += pmf.mass[k];
    levels[k] = static_cast<double>(cumulative);
  }
  return StepCdf(std::move(points), std::move(levels));
}

StepCdf StepCdf::from_samples(std::span<const double> samples) {
  if (samples.empty()) {
    throw_invalid("samples: must be nonempty");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  std::vector<double> points;
  std::vector<double> levels;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    points.push_back(sorted[i]);
    levels.push_back(static_cast<double>(j + 1) / n);
    i = j + 1;
  }
  return StepCdf(std::move(points), std::move(levels));
}

double StepCdf::cdf(double t) const {
  const auto it = std::upper_bound(points_.begin(), points_.end(), t);
  return it == points_.begin() ? 0.0 : levels_[(it - points_.begin()) - 1];
}

double StepCdf::cdf_left(double t) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), t);
  return it == points_.begin() ? 0.0 : levels_[(it - points_.begin()) - 1];
}

EmpiricalSummary summarize(const model::SampleBatch& batch) {
  if (batch.omegas.empty()) {
    throw_invalid("batch: must contain at least one draw");
  }

  EmpiricalSummary summary;
  summary.n = batch.omegas.size();

  std::uint64_t total = 0;
  for (std::uint32_t omega : batch.omegas) {
    total += omega;
    ++summary.histogram[omega];
  }
  summary.mean =
      static_cast<double>(total) / static_cast<double>(summary.n);

  if (summary.n > 1) {
    CompensatedSum squares;
    for (std::uint32_t omega : batch.omegas) {
      const double d = static_cast<double>(omega) - summary.mean;
      squares.add(d * d);
    }
    summary.variance = squares.value() / static_cast<double>(summary.n - 1);
  }
  return summary;
}

double ks_empirical(std::span<const double> samples,
                    const DistributionFunction& dist) {
  if (samples.empty()) {
    throw_invalid("samples: must be nonempty");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  double distance = 0.0;

  // Jumps of the empirical CDF: run over equal values so F(t-) uses the
  // first index of the run and F(t) the last.
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const double t = sorted[i];
    distance = std::max(
        distance, std::abs(static_cast<double>(j + 1) / n - dist.cdf(t)));
    distance = std::max(
        distance,
        std::abs(static_cast<double>(i) / n - dist.cdf_left(t)));
    i = j + 1;
  }

  // Jumps of the reference law, if it has any.
  for (double t : dist.jump_points()) {
    const auto upper =
        std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
    const auto lower =
        std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
    distance = std::max(
        distance, std::abs(static_cast<double>(upper) / n - dist.cdf(t)));
    distance = std::max(
        distance,
        std::abs(static_cast<double>(lower) / n - dist.cdf_left(t)));
  }
  return distance;
}

double ks_batch_vs_pmf(const model::SampleBatch& batch,
                       const exact::Pmf& pmf) {
  std::vector<double> samples(batch.omegas.begin(), batch.omegas.end());
  return ks_empirical(samples, StepCdf::from_pmf(pmf));
}

}  // namespace randsieve::stats
