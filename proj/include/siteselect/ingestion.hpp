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

#ifndef SITESELECT_INGESTION_HPP_
#define SITESELECT_INGESTION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/network.hpp"

namespace siteselect {

inline constexpr std::size_t kMaxUpstreamSites = 10;

struct UpstreamLink {
  std::string domain;
  double alpha_pct = 0.0;  // share of the recorded site's visitors, (0, 100]

  bool operator==(const UpstreamLink&) const = default;
};

// What an analytics lookup returns for one site. Absent optionals mean the
// provider had no data.
struct CrawlRecord {
  std::string domain;
  std::vector<UpstreamLink> upstream;  // at most kMaxUpstreamSites, ranked
  std::optional<double> reach_pct;
  std::optional<RatioProfile> age_ratios;
  std::optional<RatioProfile> income_ratios;
  bool banner_ads = false;

  bool operator==(const CrawlRecord&) const = default;
};

using CrawlRecords = std::map<std::string, CrawlRecord, std::less<>>;

// Breadth-first expansion from `seed_domain` over upstream lists, adding each
// newly discovered site once. Stops as soon as `max_nodes` nodes exist or the
// frontier is empty. Upstream domains without a record become metric-less
// nodes for prune() to drop.
WebsiteNetwork build_from_crawl(const CrawlRecords& records,
                                std::string_view seed_domain,
                                std::size_t max_nodes);

// Keeps exactly the banner-selling nodes with reach and both demographic
// profiles, and the edges between them.
WebsiteNetwork prune(const WebsiteNetwork& net);

struct SyntheticConfig {
  std::size_t node_count = 300;
  std::size_t community_count = 8;
  double reach_pareto_alpha = 1.2;
  double intra_edge_prob = 0.15;
  double inter_edge_prob = 0.005;
  double missing_data_prob = 0.05;
  double banner_ads_prob = 1.0;

  // Throws InvalidArgument naming the first bad field.
  void validate() const;
};

struct SyntheticData {
  WebsiteNetwork network;
  CrawlRecords records;  // one record per node, equivalent to `network`
};

// Community-structured network with Pareto reach. Pure function of
// (cfg, seed).
SyntheticData generate_synthetic(const SyntheticConfig& cfg, std::uint64_t seed);

CrawlRecords parse_crawl_records(std::string_view bytes);
std::string serialize_crawl_records(const CrawlRecords& records);

// JSON object with any subset of the SyntheticConfig field names.
SyntheticConfig parse_synthetic_config(std::string_view bytes);

}  // namespace siteselect

#endif  // SITESELECT_INGESTION_HPP_
