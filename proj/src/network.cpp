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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "siteselect/error.hpp"

namespace siteselect {

using nlohmann::json;

WebsiteNetwork::WebsiteNetwork(std::vector<Website> nodes,
                               std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::stable_sort(nodes_.begin(), nodes_.end(),
                   [](const Website& a, const Website& b) { return a.id < b.id; });
  std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
}

std::optional<std::size_t> WebsiteNetwork::index_of(std::string_view id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const Website& w, std::string_view key) { return w.id < key; });
  if (it == nodes_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

const Website* WebsiteNetwork::find(std::string_view id) const {
  auto idx = index_of(id);
  return idx ? &nodes_[*idx] : nullptr;
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.subject + ": " + v.message;
  }
  return out;
}

namespace {

std::string node_subject(std::string_view id) {
  return "node '" + std::string(id) + "'";
}

std::string edge_subject(const Edge& e) {
  return "edge '" + e.src + "'->'" + e.dst + "'";
}

void check_profile(const Website& w, const RatioProfile& profile,
                   std::string_view name, ValidationReport& report) {
  for (const auto& [label, ratio] : profile) {
    if (!std::isfinite(ratio) || ratio < 0.0) {
      report.violations.push_back(
          {node_subject(w.id), std::string(name) + "['" + label +
                                   "'] must be finite and >= 0"});
    }
  }
}

}  // namespace

ValidationReport validate_network(const WebsiteNetwork& net) {
  ValidationReport report;
  const auto nodes = net.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Website& w = nodes[i];
    if (w.id.empty()) {
      report.violations.push_back({"node #" + std::to_string(i), "empty id"});
    }
    if (i > 0 && nodes[i - 1].id == w.id) {
      report.violations.push_back({node_subject(w.id), "duplicate id"});
    }
    if (w.domain.empty()) {
      report.violations.push_back({node_subject(w.id), "empty domain"});
    }
    if (w.reach_pct) {
      const double r = *w.reach_pct;
      if (!std::isfinite(r) || r <= 0.0 || r > 100.0) {
        report.violations.push_back(
            {node_subject(w.id), "reach_pct must be in (0, 100]"});
      }
    }
    check_profile(w, w.age_ratios, "age_ratios", report);
    check_profile(w, w.income_ratios, "income_ratios", report);
  }

  const auto edges = net.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!std::isfinite(e.alpha) || e.alpha <= 0.0 || e.alpha > 1.0) {
      report.violations.push_back({edge_subject(e), "alpha must be in (0, 1]"});
    }
    if (e.src == e.dst) {
      report.violations.push_back({edge_subject(e), "self loop"});
    }
    if (i > 0 && edges[i - 1].src == e.src && edges[i - 1].dst == e.dst) {
      report.violations.push_back({edge_subject(e), "duplicate edge"});
    }
    if (!net.index_of(e.src)) {
      report.violations.push_back(
          {edge_subject(e), "unknown source node '" + e.src + "'"});
    }
    if (!net.index_of(e.dst)) {
      report.violations.push_back(
          {edge_subject(e), "unknown destination node '" + e.dst + "'"});
    }
  }
  return report;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) fail(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

double require_number(const json& v, const std::string& where,
                      const char* key) {
  if (!v.is_number()) fail(where, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

RatioProfile parse_profile(const json& obj, const char* key,
                           const std::string& where) {
  RatioProfile profile;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return profile;
  if (!it->is_object()) fail(where, std::string("'") + key + "' must be an object");
  for (const auto& [label, value] : it->items()) {
    if (!value.is_number()) {
      fail(where, std::string(key) + "['" + label + "'] must be a number");
    }
    const double ratio = value.get<double>();
    if (!std::isfinite(ratio) || ratio < 0.0) {
      fail(where, std::string(key) + "['" + label + "'] must be finite and >= 0");
    }
    profile.emplace(label, ratio);
  }
  return profile;
}

}  // namespace

WebsiteNetwork parse_network(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const json& version = require(doc, "version", "document");
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    fail("document", "unsupported version " + version.dump());
  }

  const json& jnodes = require(doc, "nodes", "document");
  if (!jnodes.is_array()) fail("document", "'nodes' must be an array");
  std::vector<Website> nodes;
  nodes.reserve(jnodes.size());
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    const json& jn = jnodes[i];
    std::string where = "nodes[" + std::to_string(i) + "]";
    if (!jn.is_object()) fail(where, "expected an object");
    Website w;
    w.id = require_string(jn, "id", where);
    where = node_subject(w.id);
    if (w.id.empty()) fail(where, "empty id");
    if (!seen_ids.insert(w.id).second) fail(where, "duplicate id");
    w.domain = require_string(jn, "domain", where);
    if (w.domain.empty()) fail(where, "empty domain");
    if (auto it = jn.find("reach_pct"); it != jn.end() && !it->is_null()) {
      const double r = require_number(*it, where, "reach_pct");
      if (!std::isfinite(r) || r <= 0.0 || r > 100.0) {
        fail(where, "reach_pct " + it->dump() + " outside (0, 100]");
      }
      w.reach_pct = r;
    }
    w.age_ratios = parse_profile(jn, "age_ratios", where);
    w.income_ratios = parse_profile(jn, "income_ratios", where);
    const json& banner = require(jn, "banner_ads", where);
    if (!banner.is_boolean()) fail(where, "'banner_ads' must be a boolean");
    w.banner_ads = banner.get<bool>();
    nodes.push_back(std::move(w));
  }

  const json& jedges = require(doc, "edges", "document");
  if (!jedges.is_array()) fail("document", "'edges' must be an array");
  std::vector<Edge> edges;
  edges.reserve(jedges.size());
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const json& je = jedges[i];
    std::string where = "edges[" + std::to_string(i) + "]";
    if (!je.is_object()) fail(where, "expected an object");
    Edge e;
    e.src = require_string(je, "src", where);
    e.dst = require_string(je, "dst", where);
    where = edge_subject(e);
    const double pct = require_number(require(je, "alpha_pct", where), where,
                                      "alpha_pct");
    if (!std::isfinite(pct) || pct <= 0.0 || pct > 100.0) {
      fail(where, "alpha_pct " + je["alpha_pct"].dump() + " outside (0, 100]");
    }
    e.alpha = pct / 100.0;
    if (e.src == e.dst) fail(where, "self loop");
    if (!seen_ids.contains(e.src)) fail(where, "unknown source node '" + e.src + "'");
    if (!seen_ids.contains(e.dst)) {
      fail(where, "unknown destination node '" + e.dst + "'");
    }
    if (!seen_edges.emplace(e.src, e.dst).second) fail(where, "duplicate edge");
    edges.push_back(std::move(e));
  }

  WebsiteNetwork net(std::move(nodes), std::move(edges));
  if (auto report = validate_network(net); !report.ok()) {
    throw ParseError(report.to_string());
  }
  return net;
}

double fraction_to_percent(double fraction) {
  double pct = fraction * 100.0;
  if (pct / 100.0 == fraction) return pct;
  // Walk outward a few ulps; division is monotone so the nearest working
  // neighbour sits next to the naive product.
  double up = pct;
  double down = pct;
  for (int step = 0; step < 8; ++step) {
    up = std::nextafter(up, INFINITY);
    if (up / 100.0 == fraction) return up;
    down = std::nextafter(down, -INFINITY);
    if (down / 100.0 == fraction) return down;
  }
  return pct;
}

std::string serialize_network(const WebsiteNetwork& net) {
  json doc;
  doc["version"] = 1;
  json jnodes = json::array();
  for (const Website& w : net.nodes()) {
    json jn;
    jn["id"] = w.id;
    jn["domain"] = w.domain;
    if (w.reach_pct) jn["reach_pct"] = *w.reach_pct;
    jn["age_ratios"] = w.age_ratios;
    jn["income_ratios"] = w.income_ratios;
    jn["banner_ads"] = w.banner_ads;
    jnodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(jnodes);
  json jedges = json::array();
  for (const Edge& e : net.edges()) {
    jedges.push_back(
        {{"src", e.src}, {"dst", e.dst}, {"alpha_pct", fraction_to_percent(e.alpha)}});
  }
  doc["edges"] = std::move(jedges);
  return doc.dump(2) + "\n";
}

std::string content_hash(const WebsiteNetwork& net) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_network(net)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {
constexpr std::array<std::string_view, 6> kAgeBuckets = {
    "18-24", "25-34", "35-44", "45-54", "55-64", "65+"};
constexpr std::array<std::string_view, 4> kIncomeBuckets = {
    "0-30k", "30-60k", "60-100k", "100k+"};
}  // namespace

std::span<const std::string_view> default_age_buckets() { return kAgeBuckets; }
std::span<const std::string_view> default_income_buckets() {
  return kIncomeBuckets;
}

}  // namespace siteselect
