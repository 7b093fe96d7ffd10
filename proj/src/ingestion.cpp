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

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <utility>

#include "json.hpp"
#include "siteselect/error.hpp"
#include "siteselect/rng.hpp"

namespace siteselect {

using nlohmann::json;

namespace {

void check_record(const CrawlRecord& rec) {
  if (rec.upstream.size() > kMaxUpstreamSites) {
    throw InvalidArgument("crawl record '" + rec.domain + "': " +
                          std::to_string(rec.upstream.size()) +
                          " upstream sites, at most 10 allowed");
  }
  for (const auto& link : rec.upstream) {
    if (!std::isfinite(link.alpha_pct) || link.alpha_pct <= 0.0 ||
        link.alpha_pct > 100.0) {
      throw InvalidArgument("crawl record '" + rec.domain + "': alpha_pct of '" +
                            link.domain + "' outside (0, 100]");
    }
  }
}

Website website_from_record(std::string_view domain, const CrawlRecord* rec) {
  Website w;
  w.id = std::string(domain);
  w.domain = std::string(domain);
  if (rec != nullptr) {
    w.reach_pct = rec->reach_pct;
    if (rec->age_ratios) w.age_ratios = *rec->age_ratios;
    if (rec->income_ratios) w.income_ratios = *rec->income_ratios;
    w.banner_ads = rec->banner_ads;
  }
  return w;
}

}  // namespace

WebsiteNetwork build_from_crawl(const CrawlRecords& records,
                                std::string_view seed_domain,
                                std::size_t max_nodes) {
  if (max_nodes < 1) throw InvalidArgument("max_nodes must be >= 1");
  auto seed_it = records.find(seed_domain);
  if (seed_it == records.end()) {
    throw InvalidArgument("seed not found: '" + std::string(seed_domain) + "'");
  }

  std::vector<Website> nodes;
  std::vector<Edge> edges;
  std::set<std::string, std::less<>> present;
  std::set<std::pair<std::string, std::string>> edge_keys;
  std::deque<std::string> frontier;

  nodes.push_back(website_from_record(seed_domain, &seed_it->second));
  present.emplace(seed_domain);
  frontier.emplace_back(seed_domain);

  while (!frontier.empty() && nodes.size() < max_nodes) {
    const std::string site = std::move(frontier.front());
    frontier.pop_front();
    auto rec_it = records.find(site);
    if (rec_it == records.end()) continue;
    const CrawlRecord& rec = rec_it->second;
    check_record(rec);
    for (const auto& link : rec.upstream) {
      if (nodes.size() >= max_nodes) break;
      if (link.domain == site) continue;
      if (!present.contains(link.domain)) {
        auto up = records.find(link.domain);
        nodes.push_back(website_from_record(
            link.domain, up == records.end() ? nullptr : &up->second));
        present.insert(link.domain);
        frontier.push_back(link.domain);
      }
      // First listing wins if a record names the same upstream twice.
      if (edge_keys.emplace(link.domain, site).second) {
        edges.push_back({link.domain, site, link.alpha_pct / 100.0});
      }
    }
  }
  return WebsiteNetwork(std::move(nodes), std::move(edges));
}

WebsiteNetwork prune(const WebsiteNetwork& net) {
  std::vector<Website> kept;
  std::set<std::string, std::less<>> kept_ids;
  for (const Website& w : net.nodes()) {
    if (w.banner_ads && w.has_complete_metrics()) {
      kept.push_back(w);
      kept_ids.insert(w.id);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : net.edges()) {
    if (kept_ids.contains(e.src) && kept_ids.contains(e.dst)) edges.push_back(e);
  }
  return WebsiteNetwork(std::move(kept), std::move(edges));
}

void SyntheticConfig::validate() const {
  auto prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidArgument(std::string(name) + " must be in [0, 1]");
    }
  };
  if (node_count < 1) throw InvalidArgument("node_count must be >= 1");
  if (community_count < 1) throw InvalidArgument("community_count must be >= 1");
  if (node_count < community_count) {
    throw InvalidArgument("node_count must be >= community_count");
  }
  if (!(reach_pareto_alpha > 0.0) || !std::isfinite(reach_pareto_alpha)) {
    throw InvalidArgument("reach_pareto_alpha must be > 0");
  }
  prob(intra_edge_prob, "intra_edge_prob");
  prob(inter_edge_prob, "inter_edge_prob");
  prob(missing_data_prob, "missing_data_prob");
  prob(banner_ads_prob, "banner_ads_prob");
}

namespace {

// Smallest reach the generator emits, in percent of the population.
constexpr double kReachScale = 0.05;

double draw_reach(double shape, Rng& rng) {
  for (;;) {
    const double u = 1.0 - rng.uniform01();  // (0, 1]
    const double r = kReachScale / std::pow(u, 1.0 / shape);
    if (r <= 100.0) return r;
  }
}

RatioProfile draw_profile(std::span<const std::string_view> buckets, Rng& rng) {
  RatioProfile profile;
  for (auto label : buckets) {
    profile.emplace(std::string(label), 0.3 + 1.4 * rng.uniform01());
  }
  return profile;
}

std::string synthetic_id(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n).size();
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "site-" + digits;
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  const std::size_t n = cfg.node_count;

  std::vector<Website> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    Website& w = nodes[i];
    w.id = synthetic_id(i, n);
    w.domain = w.id;
    w.reach_pct = draw_reach(cfg.reach_pareto_alpha, rng);
    const bool missing = rng.bernoulli(cfg.missing_data_prob);
    if (!missing) {
      w.age_ratios = draw_profile(default_age_buckets(), rng);
      w.income_ratios = draw_profile(default_income_buckets(), rng);
    }
    w.banner_ads = rng.bernoulli(cfg.banner_ads_prob);
  }

  SyntheticData out;
  std::vector<Edge> edges;
  for (std::size_t dst = 0; dst < n; ++dst) {
    std::vector<UpstreamLink> upstream;
    for (std::size_t src = 0; src < n; ++src) {
      if (src == dst) continue;
      const bool same = src % cfg.community_count == dst % cfg.community_count;
      if (!rng.bernoulli(same ? cfg.intra_edge_prob : cfg.inter_edge_prob)) {
        continue;
      }
      const double alpha = 1.0 - rng.uniform01();  // (0, 1]
      upstream.push_back({nodes[src].id, fraction_to_percent(alpha)});
    }
    if (upstream.size() > kMaxUpstreamSites) {
      // Partial Fisher-Yates: keep a uniform sample of ten.
      for (std::size_t k = 0; k < kMaxUpstreamSites; ++k) {
        const std::size_t pick = k + rng.uniform_index(upstream.size() - k);
        std::swap(upstream[k], upstream[pick]);
      }
      upstream.resize(kMaxUpstreamSites);
    }
    std::sort(upstream.begin(), upstream.end(),
              [](const UpstreamLink& a, const UpstreamLink& b) {
                if (a.alpha_pct != b.alpha_pct) return a.alpha_pct > b.alpha_pct;
                return a.domain < b.domain;
              });

    const Website& w = nodes[dst];
    CrawlRecord rec;
    rec.domain = w.id;
    rec.upstream = upstream;
    rec.reach_pct = w.reach_pct;
    if (!w.age_ratios.empty()) rec.age_ratios = w.age_ratios;
    if (!w.income_ratios.empty()) rec.income_ratios = w.income_ratios;
    rec.banner_ads = w.banner_ads;
    for (const auto& link : upstream) {
      edges.push_back({link.domain, w.id, link.alpha_pct / 100.0});
    }
    out.records.emplace(w.id, std::move(rec));
  }
  out.network = WebsiteNetwork(std::move(nodes), std::move(edges));
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::optional<RatioProfile> parse_optional_profile(const json& obj,
                                                   const char* key,
                                                   const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_object()) fail(where, std::string("'") + key + "' must be an object");
  RatioProfile profile;
  for (const auto& [label, value] : it->items()) {
    if (!value.is_number() || !std::isfinite(value.get<double>()) ||
        value.get<double>() < 0.0) {
      fail(where, std::string(key) + "['" + label + "'] must be a number >= 0");
    }
    profile.emplace(label, value.get<double>());
  }
  return profile;
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

}  // namespace

CrawlRecords parse_crawl_records(std::string_view bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) fail("document", "expected an object keyed by domain");
  CrawlRecords records;
  for (const auto& [domain, jr] : doc.items()) {
    const std::string where = "record '" + domain + "'";
    if (!jr.is_object()) fail(where, "expected an object");
    CrawlRecord rec;
    rec.domain = domain;
    if (auto it = jr.find("upstream"); it != jr.end()) {
      if (!it->is_array()) fail(where, "'upstream' must be an array");
      if (it->size() > kMaxUpstreamSites) {
        fail(where, std::to_string(it->size()) + " upstream sites, at most 10 allowed");
      }
      for (const json& jl : *it) {
        if (!jl.is_object() || !jl.contains("domain") || !jl["domain"].is_string() ||
            !jl.contains("alpha_pct") || !jl["alpha_pct"].is_number()) {
          fail(where, "upstream entries need string 'domain' and numeric 'alpha_pct'");
        }
        const double pct = jl["alpha_pct"].get<double>();
        if (!std::isfinite(pct) || pct <= 0.0 || pct > 100.0) {
          fail(where, "alpha_pct " + jl["alpha_pct"].dump() + " outside (0, 100]");
        }
        rec.upstream.push_back({jl["domain"].get<std::string>(), pct});
      }
    }
    if (auto it = jr.find("reach_pct"); it != jr.end() && !it->is_null()) {
      if (!it->is_number()) fail(where, "'reach_pct' must be a number");
      const double r = it->get<double>();
      if (!std::isfinite(r) || r <= 0.0 || r > 100.0) {
        fail(where, "reach_pct outside (0, 100]");
      }
      rec.reach_pct = r;
    }
    rec.age_ratios = parse_optional_profile(jr, "age_ratios", where);
    rec.income_ratios = parse_optional_profile(jr, "income_ratios", where);
    if (auto it = jr.find("banner_ads"); it != jr.end()) {
      if (!it->is_boolean()) fail(where, "'banner_ads' must be a boolean");
      rec.banner_ads = it->get<bool>();
    }
    records.emplace(domain, std::move(rec));
  }
  return records;
}

std::string serialize_crawl_records(const CrawlRecords& records) {
  json doc = json::object();
  for (const auto& [domain, rec] : records) {
    json jr;
    json up = json::array();
    for (const auto& link : rec.upstream) {
      up.push_back({{"domain", link.domain}, {"alpha_pct", link.alpha_pct}});
    }
    jr["upstream"] = std::move(up);
    if (rec.reach_pct) jr["reach_pct"] = *rec.reach_pct;
    if (rec.age_ratios) jr["age_ratios"] = *rec.age_ratios;
    if (rec.income_ratios) jr["income_ratios"] = *rec.income_ratios;
    jr["banner_ads"] = rec.banner_ads;
    doc[domain] = std::move(jr);
  }
  return doc.dump(2) + "\n";
}

SyntheticConfig parse_synthetic_config(std::string_view bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) fail("config", "expected a JSON object");
  SyntheticConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    auto count = [&](std::size_t& field) {
      if (!value.is_number_unsigned()) fail("config", "'" + key + "' must be a positive integer");
      field = value.get<std::size_t>();
    };
    auto real = [&](double& field) {
      if (!value.is_number()) fail("config", "'" + key + "' must be a number");
      field = value.get<double>();
    };
    if (key == "node_count") count(cfg.node_count);
    else if (key == "community_count") count(cfg.community_count);
    else if (key == "reach_pareto_alpha") real(cfg.reach_pareto_alpha);
    else if (key == "intra_edge_prob") real(cfg.intra_edge_prob);
    else if (key == "inter_edge_prob") real(cfg.inter_edge_prob);
    else if (key == "missing_data_prob") real(cfg.missing_data_prob);
    else if (key == "banner_ads_prob") real(cfg.banner_ads_prob);
    else fail("config", "unknown field '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace siteselect
