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

#include "siteselect/oracle.hpp"

#include <gtest/gtest.h>

#include "siteselect/error.hpp"
#include "siteselect/objective.hpp"
#include "siteselect/overlap.hpp"
#include "test_support.hpp"

namespace siteselect::oracle {
namespace {

using Ids = std::vector<std::string>;

CampaignSpec reach_campaign(int m) {
  CampaignSpec c;
  c.budget_usd = 100;
  c.num_sites = m;
  c.objective_mode = ObjectiveMode::kUniqueReach;
  return c;
}

TEST(ExhaustiveOptimizeTest, Abc) {
  const WebsiteNetwork net = testing::abc_network();
  const auto r = exhaustive_optimize(net, overlap_matrix(net), Ids{"A", "B", "C"},
                                     reach_campaign(2));
  EXPECT_EQ(r.selection, (Ids{"A", "C"}));
  EXPECT_EQ(r.fitness, 58.0);
}

TEST(ExhaustiveOptimizeTest, FullSetAndSingleSite) {
  const WebsiteNetwork net = testing::random_network(7, 0.4, 21);
  const OverlapMatrix o = overlap_matrix(net);
  Ids all;
  SiteWeights w;
  for (const Website& s : net.nodes()) {
    all.push_back(s.id);
    w[s.id] = *s.reach_pct;
  }
  const auto full = exhaustive_optimize(net, o, all, reach_campaign(7));
  EXPECT_EQ(full.selection, all);
  EXPECT_DOUBLE_EQ(full.fitness, fitness(all, o, w));

  const auto one = exhaustive_optimize(net, o, all, reach_campaign(1));
  const auto top = std::max_element(w.begin(), w.end(), [](auto& a, auto& b) {
    return a.second < b.second;
  });
  EXPECT_EQ(one.selection, Ids{top->first});
}

TEST(ExhaustiveOptimizeTest, GuardsAndInfeasible) {
  const WebsiteNetwork big = testing::random_network(60, 0.0, 1);
  Ids all;
  for (const Website& s : big.nodes()) all.push_back(s.id);
  EXPECT_THROW(exhaustive_optimize(big, overlap_matrix(big), all, reach_campaign(6)),
               GuardExceeded);
  EXPECT_THROW(exhaustive_optimize(big, overlap_matrix(big), Ids{"n00"}, reach_campaign(2)),
               InfeasibleError);
}

TEST(EnumeratePathOverlapTest, Examples) {
  const WebsiteNetwork net({testing::make_site("u", 1), testing::make_site("v", 1),
                            testing::make_site("x", 1), testing::make_site("y", 1)},
                           {{"u", "v", 0.05}, {"u", "x", 0.5}, {"x", "v", 0.4}});
  const OverlapGraph g = symmetrize(net);
  EXPECT_NEAR(enumerate_path_overlap(g, "u", "v"), 0.20, 1e-15);
  EXPECT_EQ(enumerate_path_overlap(g, "x", "x"), 1.0);
  EXPECT_EQ(enumerate_path_overlap(g, "u", "y"), 0.0);
  EXPECT_THROW(enumerate_path_overlap(g, "u", "q"), InvalidArgument);
  EXPECT_THROW(enumerate_path_overlap(symmetrize(testing::random_network(13, 0.2, 0)),
                                      "n00", "n01"),
               GuardExceeded);
}

TEST(EnumeratePathOverlapsTest, AgreesWithPairwiseEnumeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const OverlapGraph g = symmetrize(testing::random_network(2 + seed % 8, 0.4, seed));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::vector<double> row = enumerate_path_overlaps(g, g.id(i));
      ASSERT_EQ(row.size(), g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        EXPECT_EQ(row[j], enumerate_path_overlap(g, g.id(i), g.id(j)));
      }
    }
  }
}

TEST(BinomialTest, ValuesAndSaturation) {
  EXPECT_EQ(binomial(12, 3), 220u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(1000, 500), UINT64_MAX);
}

}  // namespace
}  // namespace siteselect::oracle
