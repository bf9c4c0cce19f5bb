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

#include <span>
#include <vector>

#include "core/exact_law.hpp"

namespace randsieve::stats {

/// Distribution function for KS comparisons. Continuous laws implement cdf
/// only; step laws also provide left limits and their jump points so the
/// supremum can be taken over the union of both step sets.
class DistributionFunction {
 public:
  virtual ~DistributionFunction() = default;

  virtual double cdf(double t) const = 0;
  virtual double cdf_left(double t) const { return cdf(t); }
  virtual const std::vector<double>& jump_points() const {
    static const std::vector<double> kNone;
    return kNone;
  }
};

class NormalCdf final : public DistributionFunction {
 public:
  double cdf(double t) const override { return exact::normal_cdf(t); }
};

/// Right-continuous step function: cdf(t) is the level at the rightmost jump
/// point <= t, or 0 before the first jump.
class StepCdf final : public DistributionFunction {
 public:
  /// points must be strictly increasing, levels nondecreasing, same length.
  StepCdf(std::vector<double> points, std::vector<double> levels);

  /// Step CDF of an exact pmf, with jumps at 0..support_cap.
  static StepCdf from_pmf(const exact::Pmf& pmf);

  /// Empirical CDF of a sample (need not be sorted).
  static StepCdf from_samples(std::span<const double> samples);

  double cdf(double t) const override;
  double cdf_left(double t) const override;
  const std::vector<double>& jump_points() const override { return points_; }

 private:
  std::vector<double> points_;
  std::vector<double> levels_;
};

}  // namespace randsieve::stats
