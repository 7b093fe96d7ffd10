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

#ifndef SITESELECT_SRC_SELECTION_CONTEXT_HPP_
#define SITESELECT_SRC_SELECTION_CONTEXT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "siteselect/campaign.hpp"
#include "siteselect/network.hpp"
#include "siteselect/objective.hpp"
#include "siteselect/overlap.hpp"

namespace siteselect::internal {

// Shared setup for the GA and the exhaustive oracle, so both score subsets
// through the same evaluator.
struct SelectionContext {
  std::vector<std::size_t> feasible;  // sorted matrix indices
  std::vector<std::string> feasible_ids;
  SiteWeights weights;
  FitnessEvaluator evaluator;
  std::size_t m;

  std::vector<std::string> ids_of(std::span<const std::size_t> indices,
                                  const OverlapMatrix& overlap) const {
    std::vector<std::string> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(overlap.ids()[i]);
    return out;
  }
};

SelectionContext make_selection_context(const WebsiteNetwork& net,
                                        const OverlapMatrix& overlap,
                                        std::span<const std::string> feasible,
                                        const CampaignSpec& campaign);

}  // namespace siteselect::internal

#endif  // SITESELECT_SRC_SELECTION_CONTEXT_HPP_
