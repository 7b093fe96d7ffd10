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

#ifndef SITESELECT_NETWORK_HPP_
#define SITESELECT_NETWORK_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace siteselect {

// Demographic profile: bucket label -> share of that bucket on the site
// relative to the internet average (1.0 = average).
using RatioProfile = std::map<std::string, double>;

// One website in the network.
//
// reach_pct and the ratio profiles may be absent on freshly crawled nodes
// whose analytics were unavailable; prune() removes such nodes.
struct Website {
  std::string id;
  std::string domain;
  std::optional<double> reach_pct;
  RatioProfile age_ratios;
  RatioProfile income_ratios;
  bool banner_ads = false;

  // Has reach and both demographic profiles.
  bool has_complete_metrics() const {
    return reach_pct.has_value() && !age_ratios.empty() &&
           !income_ratios.empty();
  }

  bool operator==(const Website&) const = default;
};

// Directed upstream-traffic edge: `alpha` is the fraction of dst's visitors
// arriving from src, in (0, 1].
struct Edge {
  std::string src;
  std::string dst;
  double alpha = 0.0;

  bool operator==(const Edge&) const = default;
};

// Immutable directed weighted graph of websites.
//
// Construction only canonicalizes (nodes sorted by id, edges by (src, dst));
// it does not reject invariant violations so that validate_network() can
// report them. Everything produced by the parsers, the crawl builder and the
// synthetic generator is valid.
class WebsiteNetwork {
 public:
  WebsiteNetwork() = default;
  WebsiteNetwork(std::vector<Website> nodes, std::vector<Edge> edges);

  std::span<const Website> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  // Position of `id` in nodes(), which is sorted by id.
  std::optional<std::size_t> index_of(std::string_view id) const;
  const Website* find(std::string_view id) const;

  bool operator==(const WebsiteNetwork&) const = default;

 private:
  std::vector<Website> nodes_;
  std::vector<Edge> edges_;
};

struct Violation {
  std::string subject;  // "node 'x'" or "edge 'a'->'b'"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Reports every invariant violation; never throws and never mutates.
ValidationReport validate_network(const WebsiteNetwork& net);

// Parses the JSON network file format. Throws ParseError on malformed JSON
// (message carries the byte offset) or on any invariant violation (message
// names the offending node or edge).
WebsiteNetwork parse_network(std::string_view bytes);

// Canonical JSON form: nodes sorted by id, edges by (src, dst), two-space
// indentation, trailing newline.
std::string serialize_network(const WebsiteNetwork& net);

// 16 hex digit FNV-1a digest of serialize_network(net).
std::string content_hash(const WebsiteNetwork& net);

// Percentage whose division by 100 reproduces `fraction` exactly, so that
// fractions survive a write/read cycle through the percent-based formats.
double fraction_to_percent(double fraction);

// Default bucket vocabularies used by the synthetic generator.
std::span<const std::string_view> default_age_buckets();
std::span<const std::string_view> default_income_buckets();

}  // namespace siteselect

#endif  // SITESELECT_NETWORK_HPP_
