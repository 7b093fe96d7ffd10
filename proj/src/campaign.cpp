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

#include "siteselect/campaign.hpp"

#include <cmath>

namespace siteselect {

std::string_view to_string(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::kUniqueImpressions:
      return "unique-impressions";
    case ObjectiveMode::kUniqueReach:
      return "unique-reach";
  }
  return "unique-impressions";
}

std::optional<ObjectiveMode> parse_objective_mode(std::string_view text) {
  if (text == "unique-impressions" || text == "impressions") {
    return ObjectiveMode::kUniqueImpressions;
  }
  if (text == "unique-reach" || text == "reach") return ObjectiveMode::kUniqueReach;
  return std::nullopt;
}

std::vector<FieldError> GaParams::validate() const {
  std::vector<FieldError> errors;
  auto rate = [&](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      errors.push_back({std::string("ga_params.") + name, "must be in [0, 1]"});
    }
  };
  if (population_size < 2) {
    errors.push_back({"ga_params.population_size", "must be >= 2"});
  }
  if (max_generations < 1) {
    errors.push_back({"ga_params.max_generations", "must be >= 1"});
  }
  if (stall_generations < 1) {
    errors.push_back({"ga_params.stall_generations", "must be >= 1"});
  }
  if (tournament_size < 1) {
    errors.push_back({"ga_params.tournament_size", "must be >= 1"});
  }
  rate(crossover_rate, "crossover_rate");
  rate(mutation_rate, "mutation_rate");
  if (elite_count < 0) {
    errors.push_back({"ga_params.elite_count", "must be >= 0"});
  } else if (elite_count >= population_size) {
    errors.push_back({"ga_params.elite_count", "must be < population_size"});
  }
  return errors;
}

std::vector<FieldError> CampaignSpec::validate() const {
  std::vector<FieldError> errors;
  if (!(budget_usd > 0.0) || !std::isfinite(budget_usd)) {
    errors.push_back({"budget_usd", "must be a finite number > 0"});
  }
  if (num_sites < 1) errors.push_back({"num_sites", "must be >= 1"});
  for (auto& e : ga_params.validate()) errors.push_back(std::move(e));
  return errors;
}

SiteWeights site_weights(const WebsiteNetwork& net, const CostModel& costs,
                         const CampaignSpec& campaign) {
  SiteWeights weights;
  for (const Website& w : net.nodes()) {
    if (!w.reach_pct) continue;
    if (campaign.objective_mode == ObjectiveMode::kUniqueReach) {
      weights.emplace(w.id, *w.reach_pct);
    } else {
      weights.emplace(w.id, impressions_per_site(campaign.budget_usd,
                                                 campaign.num_sites, costs.cpm(w.id)));
    }
  }
  return weights;
}

SiteWeights site_weights(const WebsiteNetwork& net, const CampaignSpec& campaign) {
  return site_weights(net, build_cost_model(net), campaign);
}

std::vector<std::string> feasible_sites(const WebsiteNetwork& net,
                                        const Targeting& targeting) {
  std::vector<std::string> out;
  for (auto& id : demographic_filter(net, targeting)) {
    const Website* w = net.find(id);
    if (w->banner_ads && w->has_complete_metrics()) out.push_back(std::move(id));
  }
  return out;
}

}  // namespace siteselect
