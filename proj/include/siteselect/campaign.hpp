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

#ifndef SITESELECT_CAMPAIGN_HPP_
#define SITESELECT_CAMPAIGN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/constraints.hpp"
#include "siteselect/network.hpp"

namespace siteselect {

enum class ObjectiveMode {
  kUniqueImpressions,  // site weight = impressions bought with its budget share
  kUniqueReach,        // site weight = reach_pct
};

// "unique-impressions" / "unique-reach".
std::string_view to_string(ObjectiveMode mode);
// Also accepts the short forms "impressions" and "reach".
std::optional<ObjectiveMode> parse_objective_mode(std::string_view text);

struct FieldError {
  std::string field;
  std::string message;

  bool operator==(const FieldError&) const = default;
};

struct GaParams {
  int population_size = 100;
  int max_generations = 200;
  int stall_generations = 50;
  int tournament_size = 3;
  double crossover_rate = 0.9;
  double mutation_rate = 0.2;  // per-offspring probability of one swap
  int elite_count = 2;

  std::vector<FieldError> validate() const;
  bool operator==(const GaParams&) const = default;
};

struct CampaignSpec {
  double budget_usd = 0.0;
  int num_sites = 0;
  Targeting targeting;
  ObjectiveMode objective_mode = ObjectiveMode::kUniqueImpressions;
  GaParams ga_params;
  std::optional<std::uint64_t> seed;

  // Field-level problems; empty when the campaign is usable.
  std::vector<FieldError> validate() const;
  bool operator==(const CampaignSpec&) const = default;
};

using SiteWeights = std::map<std::string, double, std::less<>>;

// Objective weight for every site with a known reach.
SiteWeights site_weights(const WebsiteNetwork& net, const CostModel& costs,
                         const CampaignSpec& campaign);
SiteWeights site_weights(const WebsiteNetwork& net, const CampaignSpec& campaign);

// Sites a campaign may buy: demographic_filter() restricted to banner-selling
// sites with complete metrics. Sorted ids.
std::vector<std::string> feasible_sites(const WebsiteNetwork& net,
                                        const Targeting& targeting);

}  // namespace siteselect

#endif  // SITESELECT_CAMPAIGN_HPP_
