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

#include "siteselect/ingestion.hpp"

#include <gtest/gtest.h>

#include <set>

#include "siteselect/error.hpp"
#include "test_support.hpp"

namespace siteselect {
namespace {

using testing::make_site;

CrawlRecord full_record(const std::string& domain, std::vector<UpstreamLink> upstream) {
  CrawlRecord r;
  r.domain = domain;
  r.upstream = std::move(upstream);
  r.reach_pct = 5.0;
  r.age_ratios = RatioProfile{{"18-24", 1.1}};
  r.income_ratios = RatioProfile{{"100k+", 0.9}};
  r.banner_ads = true;
  return r;
}

// Site k lists sites 10k+1 .. 10k+10 upstream: a 10-ary tree.
CrawlRecords tree_records(int count) {
  CrawlRecords records;
  for (int k = 0; k < count; ++k) {
    std::vector<UpstreamLink> up;
    for (int c = 1; c <= 10; ++c) {
      up.push_back({"s" + std::to_string(10 * k + c), 10.0 + c});
    }
    const std::string d = "s" + std::to_string(k);
    records[d] = full_record(d, std::move(up));
  }
  return records;
}

TEST(BuildFromCrawlTest, StopsAtExactlyMaxNodes) {
  const WebsiteNetwork net = build_from_crawl(tree_records(2000), "s0", 300);
  EXPECT_EQ(net.node_count(), 300u);
  for (const Edge& e : net.edges()) {
    EXPECT_TRUE(net.index_of(e.src));
    EXPECT_TRUE(net.index_of(e.dst));
  }
}

TEST(BuildFromCrawlTest, MaxNodesOneKeepsOnlySeed) {
  const WebsiteNetwork net = build_from_crawl(tree_records(20), "s0", 1);
  ASSERT_EQ(net.node_count(), 1u);
  EXPECT_EQ(net.nodes()[0].id, "s0");
  EXPECT_EQ(net.edge_count(), 0u);
}

TEST(BuildFromCrawlTest, MutualUpstreamAddsEachSiteOnce) {
  CrawlRecords records;
  records["a"] = full_record("a", {{"b", 30}});
  records["b"] = full_record("b", {{"a", 40}});
  const WebsiteNetwork net = build_from_crawl(records, "a", 300);
  EXPECT_EQ(net.node_count(), 2u);
  ASSERT_EQ(net.edge_count(), 2u);
  EXPECT_TRUE(validate_network(net).ok());
}

TEST(BuildFromCrawlTest, UnknownSeedThrows) {
  EXPECT_THROW(build_from_crawl(tree_records(3), "nope", 10), InvalidArgument);
}

TEST(BuildFromCrawlTest, MissingRecordBecomesMetriclessNode) {
  CrawlRecords records;
  records["a"] = full_record("a", {{"ghost", 30}});
  const WebsiteNetwork net = build_from_crawl(records, "a", 10);
  ASSERT_EQ(net.node_count(), 2u);
  EXPECT_FALSE(net.find("ghost")->has_complete_metrics());
  EXPECT_EQ(prune(net).node_count(), 1u);
}

TEST(BuildFromCrawlTest, NeverExceedsMaxNodes) {
  const CrawlRecords records = tree_records(200);
  for (std::size_t cap : {1u, 2u, 7u, 11u, 50u, 5000u}) {
    const WebsiteNetwork net = build_from_crawl(records, "s0", cap);
    EXPECT_LE(net.node_count(), cap);
    std::set<std::string> ids;
    for (const Website& w : net.nodes()) EXPECT_TRUE(ids.insert(w.id).second);
  }
}

TEST(PruneTest, DropsIncompleteNodeAndIncidentEdges) {
  Website lacking = make_site("X", 10);
  lacking.income_ratios.clear();
  WebsiteNetwork net({make_site("A", 1), make_site("B", 2), lacking},
                     {{"A", "X", 0.1}, {"X", "B", 0.2}, {"B", "X", 0.3}, {"A", "B", 0.4}});
  const WebsiteNetwork out = prune(net);
  EXPECT_EQ(out.node_count(), 2u);
  ASSERT_EQ(out.edge_count(), 1u);
  EXPECT_EQ(out.edges()[0], (Edge{"A", "B", 0.4}));
}

TEST(PruneTest, CompleteNetworkIsFixedPoint) {
  const WebsiteNetwork net = testing::abc_network();
  EXPECT_EQ(prune(net), net);
  EXPECT_EQ(prune(prune(net)), prune(net));
}

TEST(PruneTest, DropsSiteWithoutBannerAds) {
  WebsiteNetwork net({make_site("A", 1), make_site("B", 2, {{"25-34", 1.0}},
                                                   {{"60-100k", 1.0}}, false)},
                     {{"A", "B", 0.5}});
  const WebsiteNetwork out = prune(net);
  ASSERT_EQ(out.node_count(), 1u);
  EXPECT_EQ(out.nodes()[0].id, "A");
  EXPECT_EQ(out.edge_count(), 0u);
}

TEST(GenerateSyntheticTest, DeterministicForSeed) {
  SyntheticConfig cfg;
  cfg.node_count = 120;
  const auto a = generate_synthetic(cfg, 42);
  const auto b = generate_synthetic(cfg, 42);
  EXPECT_EQ(serialize_network(a.network), serialize_network(b.network));
  EXPECT_EQ(serialize_crawl_records(a.records), serialize_crawl_records(b.records));
  EXPECT_NE(serialize_network(a.network),
            serialize_network(generate_synthetic(cfg, 43).network));
}

TEST(GenerateSyntheticTest, NodeCountIsExact) {
  SyntheticConfig cfg;
  cfg.node_count = 50;
  const auto data = generate_synthetic(cfg, 1);
  EXPECT_EQ(data.network.node_count(), 50u);
  EXPECT_TRUE(validate_network(data.network).ok());
}

TEST(GenerateSyntheticTest, AllMissingDataPrunesToEmpty) {
  SyntheticConfig cfg;
  cfg.node_count = 40;
  cfg.missing_data_prob = 1.0;
  EXPECT_TRUE(prune(generate_synthetic(cfg, 9).network).empty());
}

TEST(GenerateSyntheticTest, DefaultScaleHasReachInRangeAndCappedInDegree) {
  const auto data = generate_synthetic(SyntheticConfig{}, 2026);
  EXPECT_EQ(data.network.node_count(), 300u);
  std::map<std::string, int> in_degree;
  for (const Edge& e : data.network.edges()) ++in_degree[e.dst];
  for (const auto& [id, d] : in_degree) EXPECT_LE(d, 10) << id;
  for (const Website& w : data.network.nodes()) {
    if (!w.reach_pct) continue;
    EXPECT_GT(*w.reach_pct, 0.0);
    EXPECT_LE(*w.reach_pct, 100.0);
  }
}

// Rebuilding from the emitted records reproduces the network's edges.
TEST(GenerateSyntheticTest, RecordsMatchNetwork) {
  SyntheticConfig cfg;
  cfg.node_count = 80;
  cfg.community_count = 4;
  const auto data = generate_synthetic(cfg, 5);
  ASSERT_EQ(data.records.size(), data.network.node_count());
  std::set<std::tuple<std::string, std::string, double>> from_records;
  for (const auto& [domain, rec] : data.records) {
    EXPECT_LE(rec.upstream.size(), kMaxUpstreamSites);
    for (const UpstreamLink& u : rec.upstream) {
      from_records.emplace(u.domain, domain, u.alpha_pct / 100.0);
    }
  }
  std::set<std::tuple<std::string, std::string, double>> from_net;
  for (const Edge& e : data.network.edges()) from_net.emplace(e.src, e.dst, e.alpha);
  EXPECT_EQ(from_records, from_net);
}

TEST(SyntheticConfigTest, RejectsBadValuesAndUnknownFields) {
  SyntheticConfig cfg;
  cfg.intra_edge_prob = 1.5;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  EXPECT_THROW(parse_synthetic_config(R"({"node_cnt": 5})"), ParseError);
  EXPECT_EQ(parse_synthetic_config(R"({"node_count": 5, "community_count": 2})").node_count, 5u);
}

TEST(CrawlRecordsTest, RoundTrip) {
  const CrawlRecords records = tree_records(4);
  EXPECT_EQ(parse_crawl_records(serialize_crawl_records(records)), records);
}

}  // namespace
}  // namespace siteselect
