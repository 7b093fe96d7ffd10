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

#ifndef SITESELECT_ORACLE_HPP_
#define SITESELECT_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/campaign.hpp"
#include "siteselect/network.hpp"
#include "siteselect/overlap.hpp"

// Exact, exponential-time counterparts of the optimizer and the overlap
// search. Correctness anchors for tests and tooling only.
namespace siteselect::oracle {

inline constexpr std::uint64_t kMaxSubsets = 1'000'000;
inline constexpr std::size_t kMaxPathNodes = 12;

struct ExhaustiveResult {
  std::vector<std::string> selection;  // sorted ids
  double fitness = 0.0;
};

// Scores every num_sites-subset of `feasible`; ties go to the
// lexicographically smallest sorted id list. Throws GuardExceeded when there
// are more than kMaxSubsets subsets, InfeasibleError when |feasible| < m.
ExhaustiveResult exhaustive_optimize(const WebsiteNetwork& net,
                                     const OverlapMatrix& overlap,
                                     std::span<const std::string> feasible,
                                     const CampaignSpec& campaign);

// Max product of weights over every simple path, by depth-first enumeration.
// Throws GuardExceeded on graphs with more than kMaxPathNodes nodes.
double enumerate_path_overlap(const OverlapGraph& g, std::string_view from,
                              std::string_view to);

// enumerate_path_overlap from `from` to every node, indexed like `g`, from a
// single enumeration.
std::vector<double> enumerate_path_overlaps(const OverlapGraph& g, std::string_view from);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace siteselect::oracle

#endif  // SITESELECT_ORACLE_HPP_
