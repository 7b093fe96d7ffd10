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

// Fixtures and generators shared by the test binaries.

#ifndef SITESELECT_TESTS_TEST_SUPPORT_HPP_
#define SITESELECT_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "siteselect/ingestion.hpp"
#include "siteselect/network.hpp"
#include "siteselect/rng.hpp"

namespace siteselect::testing {

inline std::string read_test_file(const std::string& name) {
  std::ifstream in(std::string(SITESELECT_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Website make_site(std::string id, double reach, RatioProfile age = {{"25-34", 1.0}},
                         RatioProfile income = {{"60-100k", 1.0}}, bool banner = true) {
  Website w;
  w.id = id;
  w.domain = id + ".example";
  w.reach_pct = reach;
  w.age_ratios = std::move(age);
  w.income_ratios = std::move(income);
  w.banner_ads = banner;
  return w;
}

// Three sites with reach 40/30/20; A and B share 80% of their audience in
// both directions, A-C and B-C share 10%.
inline WebsiteNetwork abc_network() {
  std::vector<Website> nodes = {
      make_site("A", 40.0, {{"18-24", 0.8}, {"25-34", 1.3}}, {{"60-100k", 1.1}, {"100k+", 0.9}}),
      make_site("B", 30.0, {{"18-24", 1.2}, {"25-34", 0.9}}, {{"60-100k", 0.7}, {"100k+", 1.4}}),
      make_site("C", 20.0, {{"18-24", 1.1}, {"25-34", 1.05}}, {{"60-100k", 1.2}, {"100k+", 1.0}}),
  };
  std::vector<Edge> edges = {{"A", "B", 0.8}, {"B", "A", 0.8}, {"A", "C", 0.1},
                             {"C", "A", 0.1}, {"B", "C", 0.1}, {"C", "B", 0.1}};
  return WebsiteNetwork(std::move(nodes), std::move(edges));
}

// Random complete-metric network of `n` nodes with directed edges drawn
// with probability `density`. Weights are occasionally exactly 1 to
// exercise ties.
inline WebsiteNetwork random_network(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Website> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    RatioProfile age{{"18-24", 0.5 + rng.uniform01()}, {"25-34", 0.5 + rng.uniform01()}};
    RatioProfile income{{"0-30k", 0.5 + rng.uniform01()}, {"100k+", 0.5 + rng.uniform01()}};
    char id[32];
    std::snprintf(id, sizeof id, "n%02zu", i);
    nodes.push_back(make_site(id, 1.0 + 99.0 * rng.uniform01(), age, income));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !rng.bernoulli(density)) continue;
      const double alpha = rng.bernoulli(0.05) ? 1.0 : 1.0 - rng.uniform01();
      edges.push_back({nodes[i].id, nodes[j].id, alpha});
    }
  }
  return WebsiteNetwork(std::move(nodes), std::move(edges));
}

}  // namespace siteselect::testing

#endif  // SITESELECT_TESTS_TEST_SUPPORT_HPP_
