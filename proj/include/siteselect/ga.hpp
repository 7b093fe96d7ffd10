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

#ifndef SITESELECT_GA_HPP_
#define SITESELECT_GA_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "siteselect/campaign.hpp"
#include "siteselect/network.hpp"
#include "siteselect/objective.hpp"
#include "siteselect/overlap.hpp"
#include "siteselect/rng.hpp"

namespace siteselect {

struct GenerationStats {
  int generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;

  bool operator==(const GenerationStats&) const = default;
};

using ProgressCallback = std::function<void(const GenerationStats&)>;

struct OptimizationResult {
  std::vector<std::string> selection;  // sorted ids
  double fitness = 0.0;
  std::vector<GenerationStats> history;
  PlanMetrics metrics;
  ObjectiveMode objective_mode = ObjectiveMode::kUniqueImpressions;
  std::uint64_t seed = 0;
  GaParams params;

  bool operator==(const OptimizationResult&) const = default;
};

// Chromosomes are sorted vectors of distinct genes.

// Keeps the parents' common genes and fills the remaining slots with a
// uniform sample, without replacement, of the genes only one parent has.
template <typename Gene>
std::vector<Gene> crossover(std::span<const Gene> parent_a,
                            std::span<const Gene> parent_b, Rng& rng) {
  std::vector<Gene> child;
  std::set_intersection(parent_a.begin(), parent_a.end(), parent_b.begin(),
                        parent_b.end(), std::back_inserter(child));
  std::vector<Gene> pool;
  std::set_symmetric_difference(parent_a.begin(), parent_a.end(), parent_b.begin(),
                                parent_b.end(), std::back_inserter(pool));
  const std::size_t missing = parent_a.size() - child.size();
  for (std::size_t k = 0; k < missing; ++k) {
    const std::size_t pick = k + rng.uniform_index(pool.size() - k);
    std::swap(pool[k], pool[pick]);
    child.push_back(pool[k]);
  }
  std::sort(child.begin(), child.end());
  return child;
}

// With probability `rate`, swaps one uniformly chosen member for a uniformly
// chosen feasible non-member. Identity when every feasible gene is a member.
template <typename Gene>
std::vector<Gene> mutate(std::span<const Gene> chromosome,
                         std::span<const Gene> feasible, double rate, Rng& rng) {
  std::vector<Gene> out(chromosome.begin(), chromosome.end());
  if (!rng.bernoulli(rate)) return out;
  std::vector<Gene> outsiders;
  std::set_difference(feasible.begin(), feasible.end(), chromosome.begin(),
                      chromosome.end(), std::back_inserter(outsiders));
  if (outsiders.empty() || out.empty()) return out;
  const std::size_t slot = rng.uniform_index(out.size());
  out[slot] = outsiders[rng.uniform_index(outsiders.size())];
  std::sort(out.begin(), out.end());
  return out;
}

// Genetic-algorithm search for the campaign.num_sites-subset of `feasible`
// maximizing fitness. Deterministic for fixed inputs and seed; `progress`
// sees every generation in order.
//
// Throws InfeasibleError when |feasible| < num_sites and InvalidArgument on
// invalid parameters or ids unknown to the network or matrix.
OptimizationResult optimize(const WebsiteNetwork& net, const OverlapMatrix& overlap,
                            std::span<const std::string> feasible,
                            const CampaignSpec& campaign, const GaParams& params,
                            std::uint64_t seed, const ProgressCallback& progress = {});

// Whole pipeline for one campaign: feasible_sites -> cost model -> weights ->
// optimize. Uses campaign.ga_params and campaign.seed (0 when absent).
OptimizationResult plan_campaign(const WebsiteNetwork& net, const OverlapMatrix& overlap,
                                 const CampaignSpec& campaign,
                                 const ProgressCallback& progress = {});

}  // namespace siteselect

#endif  // SITESELECT_GA_HPP_
