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

#ifndef SITESELECT_CONSTRAINTS_HPP_
#define SITESELECT_CONSTRAINTS_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/network.hpp"

namespace siteselect {

// Demographic targeting. An empty bucket set disables that dimension.
struct Targeting {
  std::set<std::string> age_buckets;
  std::set<std::string> income_buckets;

  bool empty() const { return age_buckets.empty() && income_buckets.empty(); }
  bool operator==(const Targeting&) const = default;
};

struct BucketVocabulary {
  std::set<std::string> age;
  std::set<std::string> income;
};

// Union of the bucket labels used anywhere in the network.
BucketVocabulary bucket_vocabulary(const WebsiteNetwork& net);

// Ids (sorted) of the sites whose ratio exceeds 1.0 in at least one targeted
// bucket of every enabled dimension. A bucket missing from a site's profile
// counts as no data, not as above average. Throws InvalidArgument naming any
// label absent from the network's vocabulary.
std::vector<std::string> demographic_filter(const WebsiteNetwork& net,
                                            const Targeting& t);

inline constexpr double kMinCpmUsd = 0.5;
inline constexpr double kMaxCpmUsd = 5.0;

// Per-site CPM in [0.5, 5.0], affine in reach over the whole network.
class CostModel {
 public:
  CostModel() = default;
  explicit CostModel(std::map<std::string, double, std::less<>> cpm)
      : cpm_(std::move(cpm)) {}

  // Throws InvalidArgument for a site without a cost (unknown or no reach).
  double cpm(std::string_view id) const;
  bool contains(std::string_view id) const { return cpm_.find(id) != cpm_.end(); }
  const std::map<std::string, double, std::less<>>& entries() const { return cpm_; }

 private:
  std::map<std::string, double, std::less<>> cpm_;
};

// cpm_i = 0.5 + 4.5 * (r_i - r_min) / (r_max - r_min) over the nodes with a
// known reach; 2.75 for every site when all reaches are equal. Throws
// InvalidArgument when no node has a reach.
CostModel build_cost_model(const WebsiteNetwork& net);

// (budget / m) / cpm * 1000.
double impressions_per_site(double budget_usd, int m, double cpm_usd);

}  // namespace siteselect

#endif  // SITESELECT_CONSTRAINTS_HPP_
