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

#include "siteselect/overlap.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <utility>

#include "json.hpp"
#include "siteselect/error.hpp"

namespace siteselect {

using nlohmann::json;

namespace {

std::optional<std::size_t> sorted_index(const std::vector<std::string>& ids,
                                        std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

OverlapGraph::OverlapGraph(std::vector<std::string> ids,
                           std::vector<std::vector<Neighbor>> adjacency)
    : ids_(std::move(ids)), adjacency_(std::move(adjacency)) {
  assert(ids_.size() == adjacency_.size());
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::optional<std::size_t> OverlapGraph::index_of(std::string_view id) const {
  return sorted_index(ids_, id);
}

std::optional<double> OverlapGraph::weight(std::size_t i, std::size_t j) const {
  const auto& list = adjacency_[i];
  auto it = std::lower_bound(list.begin(), list.end(), j,
                             [](const Neighbor& n, std::size_t key) { return n.node < key; });
  if (it == list.end() || it->node != j) return std::nullopt;
  return it->weight;
}

OverlapGraph symmetrize(const WebsiteNetwork& net) {
  std::vector<std::string> ids;
  ids.reserve(net.node_count());
  for (const Website& w : net.nodes()) ids.push_back(w.id);

  std::map<std::pair<std::size_t, std::size_t>, double> undirected;
  for (const Edge& e : net.edges()) {
    const auto a = net.index_of(e.src);
    const auto b = net.index_of(e.dst);
    if (!a || !b || *a == *b) {
      throw InvalidArgument("edge '" + e.src + "'->'" + e.dst +
                            "' does not connect two distinct known nodes");
    }
    if (!(e.alpha > 0.0 && e.alpha <= 1.0)) {
      throw InvalidArgument("edge '" + e.src + "'->'" + e.dst + "' has alpha outside (0, 1]");
    }
    auto key = std::minmax(*a, *b);
    auto [it, inserted] = undirected.emplace(key, e.alpha);
    if (!inserted) it->second = std::max(it->second, e.alpha);
  }

  std::vector<std::vector<OverlapGraph::Neighbor>> adjacency(ids.size());
  for (const auto& [key, w] : undirected) {
    adjacency[key.first].push_back({key.second, w});
    adjacency[key.second].push_back({key.first, w});
  }
  return OverlapGraph(std::move(ids), std::move(adjacency));
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Label {
  double product = 0.0;
  std::size_t hops = 0;
  std::size_t pred = kNone;
  bool reached = false;
  bool settled = false;
};

std::vector<std::size_t> trace(const std::vector<Label>& labels, std::size_t v) {
  std::vector<std::size_t> path;
  for (std::size_t at = v; at != kNone; at = labels[at].pred) path.push_back(at);
  std::reverse(path.begin(), path.end());
  return path;
}

// Best-first search maximizing the running product. With every weight <= 1
// extending a path never improves it, so the first time a node is popped its
// label is final (Dijkstra on -log w).
std::vector<Label> best_paths_from(const OverlapGraph& g, std::size_t source) {
  std::vector<Label> labels(g.size());
  labels[source] = {1.0, 0, kNone, true, false};

  struct Entry {
    double product;
    std::size_t hops;
    std::size_t node;
  };
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.product != b.product) return a.product < b.product;
    if (a.hops != b.hops) return a.hops > b.hops;
    return a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
  queue.push({1.0, 0, source});

  while (!queue.empty()) {
    const Entry top = queue.top();
    queue.pop();
    Label& lu = labels[top.node];
    if (lu.settled || top.product != lu.product || top.hops != lu.hops) continue;
    lu.settled = true;

    for (const auto& nb : g.neighbors(top.node)) {
      assert(nb.weight > 0.0 && nb.weight <= 1.0);
      Label& lv = labels[nb.node];
      if (lv.settled) continue;
      const double product = lu.product * nb.weight;
      const std::size_t hops = lu.hops + 1;
      bool better = !lv.reached || product > lv.product ||
                    (product == lv.product && hops < lv.hops);
      if (!better && product == lv.product && hops == lv.hops &&
          lv.pred != top.node) {
        // Same value and length: both paths end in v, so compare prefixes.
        better = trace(labels, top.node) < trace(labels, lv.pred);
      }
      if (!better) continue;
      const bool key_changed = !lv.reached || product != lv.product || hops != lv.hops;
      lv = {product, hops, top.node, true, false};
      if (key_changed) queue.push({product, hops, nb.node});
    }
  }
  return labels;
}

}  // namespace

PathResult max_product_path(const OverlapGraph& g, std::string_view from,
                            std::string_view to) {
  const auto src = g.index_of(from);
  if (!src) throw InvalidArgument("unknown node id '" + std::string(from) + "'");
  const auto dst = g.index_of(to);
  if (!dst) throw InvalidArgument("unknown node id '" + std::string(to) + "'");

  PathResult result;
  if (*src == *dst) {
    result.overlap = 1.0;
    result.path = {g.id(*src)};
    return result;
  }
  const auto labels = best_paths_from(g, *src);
  if (!labels[*dst].reached) return result;
  result.overlap = labels[*dst].product;
  for (std::size_t v : trace(labels, *dst)) result.path.push_back(g.id(v));
  return result;
}

OverlapMatrix::OverlapMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  if (values_.size() != ids_.size() * ids_.size()) {
    throw InvalidArgument("overlap matrix needs n*n values");
  }
}

std::optional<std::size_t> OverlapMatrix::index_of(std::string_view id) const {
  return sorted_index(ids_, id);
}

double OverlapMatrix::at(std::string_view a, std::string_view b) const {
  const auto i = index_of(a);
  if (!i) throw InvalidArgument("unknown node id '" + std::string(a) + "'");
  const auto j = index_of(b);
  if (!j) throw InvalidArgument("unknown node id '" + std::string(b) + "'");
  return at(*i, *j);
}

OverlapMatrix overlap_matrix(const OverlapGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    if (i + 1 == n) break;
    const auto labels = best_paths_from(g, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = labels[j].reached ? labels[j].product : 0.0;
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return OverlapMatrix(g.ids(), std::move(values));
}

OverlapMatrix overlap_matrix(const WebsiteNetwork& net) {
  return overlap_matrix(symmetrize(net));
}

std::string serialize_matrix_cache(const OverlapMatrix& m,
                                   std::string_view network_hash) {
  json doc;
  doc["network_hash"] = std::string(network_hash);
  doc["ids"] = m.ids();
  doc["values"] = std::vector<double>(m.values().begin(), m.values().end());
  return doc.dump() + "\n";
}

OverlapMatrix load_matrix_cache(std::string_view bytes, const WebsiteNetwork& net) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!doc.is_object() || !doc.contains("network_hash") || !doc.contains("ids") ||
      !doc.contains("values")) {
    throw ParseError("matrix cache: expected network_hash, ids and values");
  }
  const std::string expected = content_hash(net);
  if (doc["network_hash"] != expected) {
    throw ParseError("matrix cache: computed for network " +
                     doc["network_hash"].dump() + ", not " + expected);
  }
  try {
    auto ids = doc["ids"].get<std::vector<std::string>>();
    auto values = doc["values"].get<std::vector<double>>();
    if (ids.size() != net.node_count()) {
      throw ParseError("matrix cache: node count mismatch");
    }
    return OverlapMatrix(std::move(ids), std::move(values));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix cache: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("matrix cache: ") + e.what());
  }
}

}  // namespace siteselect
