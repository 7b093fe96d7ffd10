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

#include "siteselect/constraints.hpp"

#include <gtest/gtest.h>

#include "siteselect/campaign.hpp"
#include "siteselect/error.hpp"
#include "test_support.hpp"

namespace siteselect {
namespace {

using testing::make_site;

WebsiteNetwork one_site(RatioProfile age, RatioProfile income) {
  return WebsiteNetwork({make_site("s", 10, std::move(age), std::move(income))}, {});
}

TEST(DemographicFilterTest, ThresholdIsStrictlyAboveOne) {
  const Targeting t{{"25-34"}, {}};
  EXPECT_EQ(demographic_filter(one_site({{"25-34", 1.3}}, {{"0-30k", 1}}), t).size(), 1u);
  EXPECT_TRUE(demographic_filter(one_site({{"25-34", 0.9}}, {{"0-30k", 1}}), t).empty());
  EXPECT_TRUE(demographic_filter(one_site({{"25-34", 1.0}}, {{"0-30k", 1}}), t).empty());
}

TEST(DemographicFilterTest, DimensionsIntersect) {
  const Targeting t{{"25-34"}, {"100k+"}};
  EXPECT_TRUE(demographic_filter(one_site({{"25-34", 1.2}}, {{"100k+", 0.8}}), t).empty());
  EXPECT_EQ(demographic_filter(one_site({{"25-34", 1.2}}, {{"100k+", 1.8}}), t).size(), 1u);
}

TEST(DemographicFilterTest, BucketsWithinDimensionUnite) {
  const WebsiteNetwork net({make_site("a", 1, {{"18-24", 1.5}, {"25-34", 0.5}}),
                            make_site("b", 1, {{"18-24", 0.5}, {"25-34", 1.5}}),
                            make_site("c", 1, {{"18-24", 0.5}, {"25-34", 0.5}})},
                           {});
  EXPECT_EQ(demographic_filter(net, {{"18-24", "25-34"}, {}}),
            (std::vector<std::string>{"a", "b"}));
}

TEST(DemographicFilterTest, EmptyTargetingKeepsEveryNode) {
  const WebsiteNetwork net = testing::random_network(12, 0.2, 4);
  EXPECT_EQ(demographic_filter(net, {}).size(), 12u);
}

TEST(DemographicFilterTest, UnknownBucketThrows) {
  EXPECT_THROW(demographic_filter(testing::abc_network(), {{"99+"}, {}}), InvalidArgument);
  EXPECT_THROW(demographic_filter(testing::abc_network(), {{}, {"rich"}}), InvalidArgument);
}

TEST(DemographicFilterTest, MissingBucketCountsAsNoData) {
  const WebsiteNetwork net({make_site("a", 1, {{"18-24", 1.5}}),
                            make_site("b", 1, {{"25-34", 1.5}})},
                           {});
  EXPECT_EQ(demographic_filter(net, {{"18-24"}, {}}), std::vector<std::string>{"a"});
}

TEST(BucketVocabularyTest, UnionOfLabels) {
  const BucketVocabulary v = bucket_vocabulary(testing::abc_network());
  EXPECT_EQ(v.age, (std::set<std::string>{"18-24", "25-34"}));
  EXPECT_EQ(v.income, (std::set<std::string>{"100k+", "60-100k"}));
}

TEST(CostModelTest, EndpointsAndMidpoint) {
  const WebsiteNetwork net({make_site("lo", 10), make_site("mid", 30), make_site("hi", 50)}, {});
  const CostModel c = build_cost_model(net);
  EXPECT_EQ(c.cpm("lo"), 0.5);
  EXPECT_EQ(c.cpm("hi"), 5.0);
  EXPECT_EQ(c.cpm("mid"), 2.75);
  EXPECT_THROW(c.cpm("nope"), InvalidArgument);
}

TEST(CostModelTest, EqualReachGivesMidPrice) {
  const WebsiteNetwork net({make_site("a", 7), make_site("b", 7)}, {});
  const CostModel c = build_cost_model(net);
  EXPECT_EQ(c.cpm("a"), 2.75);
  EXPECT_EQ(c.cpm("b"), 2.75);
}

TEST(CostModelTest, SkipsSitesWithoutReachAndIsMonotone) {
  Website blank = make_site("z", 1);
  blank.reach_pct.reset();
  const WebsiteNetwork with_blank({make_site("a", 1), make_site("b", 9), blank}, {});
  EXPECT_FALSE(build_cost_model(with_blank).contains("z"));
  EXPECT_THROW(build_cost_model(WebsiteNetwork({blank}, {})), InvalidArgument);

  const WebsiteNetwork net = testing::random_network(30, 0.0, 8);
  const CostModel c = build_cost_model(net);
  for (const Website& x : net.nodes()) {
    for (const Website& y : net.nodes()) {
      if (*x.reach_pct <= *y.reach_pct) EXPECT_LE(c.cpm(x.id), c.cpm(y.id));
    }
    EXPECT_GE(c.cpm(x.id), kMinCpmUsd);
    EXPECT_LE(c.cpm(x.id), kMaxCpmUsd);
  }
}

TEST(ImpressionsTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(impressions_per_site(1000, 2, 2.5), 200000);
  EXPECT_DOUBLE_EQ(impressions_per_site(100, 2, 0.5), 100000);
  EXPECT_DOUBLE_EQ(impressions_per_site(100, 2, 5.0), 10000);
  EXPECT_THROW(impressions_per_site(0, 2, 1.0), InvalidArgument);
  EXPECT_THROW(impressions_per_site(10, 0, 1.0), InvalidArgument);
}

TEST(FeasibleSitesTest, RequiresBannerAndCompleteMetrics) {
  Website no_banner = make_site("b", 5, {{"25-34", 1.5}}, {{"60-100k", 1.0}}, false);
  Website no_reach = make_site("c", 5, {{"25-34", 1.5}});
  no_reach.reach_pct.reset();
  const WebsiteNetwork net({make_site("a", 5, {{"25-34", 1.5}}), no_banner, no_reach}, {});
  EXPECT_EQ(feasible_sites(net, {{"25-34"}, {}}), std::vector<std::string>{"a"});
  EXPECT_EQ(feasible_sites(net, {}), std::vector<std::string>{"a"});
}

TEST(SiteWeightsTest, ModesPickReachOrImpressions) {
  const WebsiteNetwork net = testing::abc_network();
  CampaignSpec c;
  c.budget_usd = 100;
  c.num_sites = 2;
  c.objective_mode = ObjectiveMode::kUniqueReach;
  EXPECT_EQ(site_weights(net, c).at("B"), 30.0);
  c.objective_mode = ObjectiveMode::kUniqueImpressions;
  const SiteWeights w = site_weights(net, c);
  EXPECT_DOUBLE_EQ(w.at("A"), 50.0 / 5.0 * 1000);   // max reach, $5
  EXPECT_DOUBLE_EQ(w.at("C"), 50.0 / 0.5 * 1000);   // min reach, $0.5
  EXPECT_DOUBLE_EQ(w.at("B"), 50.0 / 2.75 * 1000);
}

TEST(CampaignSpecTest, ValidateNamesFields) {
  CampaignSpec c;
  c.budget_usd = -5;
  c.num_sites = 0;
  c.ga_params.population_size = 1;
  const auto errors = c.validate();
  ASSERT_GE(errors.size(), 3u);
  EXPECT_EQ(errors[0].field, "budget_usd");
  EXPECT_EQ(errors[1].field, "num_sites");
  EXPECT_EQ(errors[2].field, "ga_params.population_size");
  EXPECT_EQ(parse_objective_mode("reach"), ObjectiveMode::kUniqueReach);
  EXPECT_EQ(parse_objective_mode("unique-impressions"), ObjectiveMode::kUniqueImpressions);
  EXPECT_FALSE(parse_objective_mode("views"));
}

}  // namespace
}  // namespace siteselect
