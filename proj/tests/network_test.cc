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

#include "siteselect/network.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "siteselect/error.hpp"
#include "siteselect/ingestion.hpp"
#include "siteselect/rng.hpp"
#include "test_support.hpp"

namespace siteselect {
namespace {

using testing::abc_network;
using testing::make_site;
using testing::read_test_file;

TEST(ValidateNetworkTest, AbcFixtureIsValid) {
  EXPECT_TRUE(validate_network(abc_network()).ok());
}

TEST(ValidateNetworkTest, ZeroAlphaIsOneViolationNamingTheEdge) {
  WebsiteNetwork net({make_site("A", 10), make_site("B", 20)}, {{"A", "B", 0.0}});
  const auto report = validate_network(net);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].subject, "edge 'A'->'B'");
}

TEST(ValidateNetworkTest, UnknownEndpointIsOneViolation) {
  WebsiteNetwork net({make_site("A", 10)}, {{"A", "ghost", 0.5}});
  const auto report = validate_network(net);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].message.find("ghost"), std::string::npos);
}

TEST(ValidateNetworkTest, ReportsEveryViolation) {
  Website bad = make_site("X", 150.0);
  bad.age_ratios["18-24"] = -1.0;
  WebsiteNetwork net({make_site("A", 10), make_site("A", 12), bad},
                     {{"A", "A", 0.5}, {"A", "X", 1.5}, {"A", "X", 0.5}});
  const auto report = validate_network(net);
  // duplicate id, reach, ratio, self loop, alpha, duplicate edge
  EXPECT_EQ(report.violations.size(), 6u) << report.to_string();
}

TEST(ValidateNetworkTest, NeverMutates) {
  const WebsiteNetwork net = testing::random_network(9, 0.4, 3);
  const WebsiteNetwork copy = net;
  (void)validate_network(net);
  EXPECT_EQ(net, copy);
  EXPECT_EQ(net.node_count(), copy.node_count());
  EXPECT_EQ(net.edge_count(), copy.edge_count());
}

TEST(WebsiteNetworkTest, CanonicalOrderAndLookup) {
  WebsiteNetwork net({make_site("c", 1), make_site("a", 2), make_site("b", 3)},
                     {{"c", "a", 0.1}, {"a", "b", 0.2}});
  ASSERT_EQ(net.node_count(), 3u);
  EXPECT_EQ(net.nodes()[0].id, "a");
  EXPECT_EQ(net.edges()[0].src, "a");
  EXPECT_EQ(net.index_of("b"), 1u);
  EXPECT_FALSE(net.index_of("zz"));
  EXPECT_EQ(net.find("c")->reach_pct, 1.0);
}

TEST(ParseNetworkTest, AbcFileHasThreeNodesSixEdges) {
  const WebsiteNetwork net = parse_network(read_test_file("abc.json"));
  EXPECT_EQ(net.node_count(), 3u);
  EXPECT_EQ(net.edge_count(), 6u);
  EXPECT_DOUBLE_EQ(net.edges()[0].alpha, 0.8);
  EXPECT_EQ(net.find("A")->reach_pct, 40.0);
}

TEST(ParseNetworkTest, FixtureFileMatchesInMemoryFixture) {
  const WebsiteNetwork parsed = parse_network(read_test_file("abc.json"));
  const WebsiteNetwork built = abc_network();
  ASSERT_EQ(parsed.edge_count(), built.edge_count());
  for (std::size_t i = 0; i < parsed.edge_count(); ++i) {
    EXPECT_EQ(parsed.edges()[i], built.edges()[i]);
  }
}

TEST(ParseNetworkTest, RejectsZeroAlphaPct) {
  try {
    parse_network(read_test_file("zero_alpha.json"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("edge 'A'->'B'"), std::string::npos) << e.what();
  }
}

TEST(ParseNetworkTest, MalformedJsonReportsByteOffset) {
  try {
    parse_network(R"({"version": 1, "nodes": [,]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("at byte 26"), std::string::npos) << e.what();
  }
}

TEST(ParseNetworkTest, RejectsBadDocuments) {
  const char* node = R"({"id": "A", "domain": "a", "reach_pct": 5, "banner_ads": true})";
  const auto doc = [&](const std::string& nodes, const std::string& edges,
                       int version = 1) {
    return "{\"version\": " + std::to_string(version) + ", \"nodes\": [" + nodes +
           "], \"edges\": [" + edges + "]}";
  };
  EXPECT_NO_THROW(parse_network(doc(node, "")));
  EXPECT_THROW(parse_network(doc(node, "", 2)), ParseError);
  EXPECT_THROW(parse_network(doc(std::string(node) + "," + node, "")), ParseError);
  const std::string two =
      std::string(node) + R"(, {"id": "B", "domain": "b", "banner_ads": false})";
  const char* edge = R"({"src": "A", "dst": "B", "alpha_pct": 10})";
  EXPECT_NO_THROW(parse_network(doc(two, edge)));
  EXPECT_THROW(parse_network(doc(two, std::string(edge) + "," + edge)), ParseError);
  EXPECT_THROW(parse_network(doc(two, R"({"src": "A", "dst": "B", "alpha_pct": 100.5})")),
               ParseError);
  EXPECT_THROW(parse_network(doc(two, R"({"src": "A", "dst": "Q", "alpha_pct": 10})")),
               ParseError);
  EXPECT_THROW(parse_network(doc(R"({"id": "A", "domain": "a", "reach_pct": 0,
                                     "banner_ads": true})",
                                 "")),
               ParseError);
  EXPECT_THROW(parse_network(doc(R"({"id": "A", "domain": "a", "banner_ads": true,
                                     "age_ratios": {"18-24": -0.5}})",
                                 "")),
               ParseError);
}

TEST(SerializeNetworkTest, CanonicalizationIsIdempotent) {
  const std::string once = serialize_network(parse_network(read_test_file("abc.json")));
  const std::string twice = serialize_network(parse_network(once));
  EXPECT_EQ(once, twice);
}

// serialize(parse(f)) parses back to parse(f) for any valid file f.
TEST(SerializeNetworkTest, RoundTripPropertyOnRandomNetworks) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const WebsiteNetwork net = testing::random_network(3 + seed % 9, 0.35, seed);
    ASSERT_TRUE(validate_network(net).ok());
    const WebsiteNetwork parsed = parse_network(serialize_network(net));
    EXPECT_EQ(parse_network(serialize_network(parsed)), parsed) << "seed " << seed;
  }
  SyntheticConfig cfg;
  cfg.node_count = 60;
  cfg.community_count = 3;
  cfg.missing_data_prob = 0.3;
  const auto data = generate_synthetic(cfg, 11);
  EXPECT_EQ(parse_network(serialize_network(data.network)), data.network);
}

TEST(FractionToPercentTest, InvertsParsedPercentages) {
  Rng rng(5);
  for (int k = 0; k < 100000; ++k) {
    const double pct = 100.0 * (1.0 - rng.uniform01());
    const double f = pct / 100.0;
    ASSERT_EQ(fraction_to_percent(f) / 100.0, f) << pct;
  }
  EXPECT_EQ(fraction_to_percent(0.8), 80.0);
}

// Not every double in (0, 1] is some percentage divided by 100; those land
// on an adjacent double.
TEST(FractionToPercentTest, ArbitraryFractionsWithinOneUlp) {
  Rng rng(6);
  for (int k = 0; k < 100000; ++k) {
    const double f = 1.0 - rng.uniform01();
    const double back = fraction_to_percent(f) / 100.0;
    ASSERT_LE(std::fabs(back - f), std::nextafter(f, 2.0) - f) << f;
  }
}

TEST(ContentHashTest, StableAndSensitive) {
  const WebsiteNetwork a = abc_network();
  EXPECT_EQ(content_hash(a), content_hash(abc_network()));
  EXPECT_EQ(content_hash(a).size(), 16u);
  WebsiteNetwork b({make_site("A", 40)}, {});
  EXPECT_NE(content_hash(a), content_hash(b));
}

}  // namespace
}  // namespace siteselect
