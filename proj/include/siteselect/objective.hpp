// Copyright 2026 The siteselect Authors
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

#ifndef SITESELECT_OBJECTIVE_HPP_
#define SITESELECT_OBJECTIVE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "siteselect/campaign.hpp"
#include "siteselect/network.hpp"
#include "siteselect/overlap.hpp"

namespace siteselect {

struct ScoreBreakdown {
  double gross_exposures = 0.0;
  double overlap_deduction = 0.0;
  double net_score = 0.0;  // gross_exposures - overlap_deduction

  bool operator==(const ScoreBreakdown&) const = default;
};

// Overlap-discounted exposure of a site set:
//
//   F(S) = sum_i w_i - sum_{i<j} O(i,j) * min(w_i, w_j)
//
// Each pair discount bounds the audience counted twice by the smaller side.
// Higher-order overlaps are not represented in the data and are ignored.
// Works on matrix indices; selections must be sorted and distinct. Terms are
// summed in index order, so a set scores identically however it was listed.
class FitnessEvaluator {
 public:
  // `weights` is indexed like the matrix.
  FitnessEvaluator(const OverlapMatrix& overlap, std::vector<double> weights);

  ScoreBreakdown breakdown(std::span<const std::size_t> sorted_selection) const;
  double operator()(std::span<const std::size_t> sorted_selection) const {
    return breakdown(sorted_selection).net_score;
  }

 private:
  const OverlapMatrix* overlap_;
  std::vector<double> weights_;
};

// Id-level entry points. Throw InvalidArgument if an id is missing from the
// weights or the matrix, or appears twice.
ScoreBreakdown score(std::span<const std::string> selection,
                     const OverlapMatrix& overlap, const SiteWeights& weights);
double fitness(std::span<const std::string> selection, const OverlapMatrix& overlap,
               const SiteWeights& weights);

struct PlanMetrics {
  std::vector<std::string> selection;
  double gross_exposures = 0.0;
  double overlap_deduction = 0.0;
  double net_score = 0.0;

  // Top-m feasible sites by reach, the traffic-only strategy.
  std::vector<std::string> baseline_selection;
  ScoreBreakdown naive_baseline;

  // naive_baseline.overlap_deduction - overlap_deduction
  double overlap_avoided = 0.0;

  bool operator==(const PlanMetrics&) const = default;
};

// Sorted ids of the m feasible sites with the highest reach (ties by id).
std::vector<std::string> naive_baseline(const WebsiteNetwork& net,
                                        std::span<const std::string> feasible,
                                        std::size_t m);

PlanMetrics plan_metrics(std::span<const std::string> selection,
                         const OverlapMatrix& overlap, const WebsiteNetwork& net,
                         std::span<const std::string> feasible,
                         const SiteWeights& weights);

}  // namespace siteselect

#endif  // SITESELECT_OBJECTIVE_HPP_
