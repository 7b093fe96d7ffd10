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

#include <algorithm>
#include <cstdint>

#include "selection_context.hpp"
#include "siteselect/error.hpp"

namespace siteselect::oracle {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; guard the product.
    const std::uint64_t factor = n - k + i;
    if (result > UINT64_MAX / factor) return UINT64_MAX;
    result = result * factor / i;
  }
  return result;
}

ExhaustiveResult exhaustive_optimize(const WebsiteNetwork& net,
                                     const OverlapMatrix& overlap,
                                     std::span<const std::string> feasible,
                                     const CampaignSpec& campaign) {
  const internal::SelectionContext ctx =
      internal::make_selection_context(net, overlap, feasible, campaign);
  const std::size_t n = ctx.feasible.size();
  const std::size_t m = ctx.m;
  const std::uint64_t count = binomial(n, m);
  if (count > kMaxSubsets) {
    throw GuardExceeded("exhaustive search over " + std::to_string(count) +
                        " subsets exceeds the limit of 1000000; use the GA");
  }

  // Positions into ctx.feasible, advanced in lexicographic order so the first
  // subset reaching the maximum is also the lexicographically smallest.
  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = i;
  std::vector<std::size_t> subset(m);

  ExhaustiveResult best;
  bool have_best = false;
  std::vector<std::size_t> best_subset;
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) subset[i] = ctx.feasible[pos[i]];
    const double f = ctx.evaluator(subset);
    if (!have_best || f > best.fitness) {
      best.fitness = f;
      best_subset = subset;
      have_best = true;
    }
    std::size_t i = m;
    while (i > 0 && pos[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < m; ++j) pos[j] = pos[j - 1] + 1;
  }
  best.selection = ctx.ids_of(best_subset, overlap);
  return best;
}

namespace {

void extend(const OverlapGraph& g, std::size_t at, std::size_t target, double product,
            std::vector<bool>& on_path, double& best) {
  if (at == target) {
    best = std::max(best, product);
    return;
  }
  for (const auto& nb : g.neighbors(at)) {
    if (on_path[nb.node]) continue;
    on_path[nb.node] = true;
    extend(g, nb.node, target, product * nb.weight, on_path, best);
    on_path[nb.node] = false;
  }
}

// Every simple path from the root ends somewhere; keep the best per end.
void extend_all(const OverlapGraph& g, std::size_t at, double product,
                std::vector<bool>& on_path, std::vector<double>& best) {
  best[at] = std::max(best[at], product);
  for (const auto& nb : g.neighbors(at)) {
    if (on_path[nb.node]) continue;
    on_path[nb.node] = true;
    extend_all(g, nb.node, product * nb.weight, on_path, best);
    on_path[nb.node] = false;
  }
}

void check_guard(const OverlapGraph& g) {
  if (g.size() > kMaxPathNodes) {
    throw GuardExceeded("path enumeration limited to 12 nodes, graph has " +
                        std::to_string(g.size()));
  }
}

}  // namespace

std::vector<double> enumerate_path_overlaps(const OverlapGraph& g, std::string_view from) {
  check_guard(g);
  const auto src = g.index_of(from);
  if (!src) throw InvalidArgument("unknown node id '" + std::string(from) + "'");
  std::vector<bool> on_path(g.size(), false);
  on_path[*src] = true;
  std::vector<double> best(g.size(), 0.0);
  extend_all(g, *src, 1.0, on_path, best);
  return best;
}

double enumerate_path_overlap(const OverlapGraph& g, std::string_view from,
                              std::string_view to) {
  check_guard(g);
  const auto src = g.index_of(from);
  if (!src) throw InvalidArgument("unknown node id '" + std::string(from) + "'");
  const auto dst = g.index_of(to);
  if (!dst) throw InvalidArgument("unknown node id '" + std::string(to) + "'");
  if (*src == *dst) return 1.0;

  std::vector<bool> on_path(g.size(), false);
  on_path[*src] = true;
  double best = 0.0;
  extend(g, *src, *dst, 1.0, on_path, best);
  return best;
}

}  // namespace siteselect::oracle
