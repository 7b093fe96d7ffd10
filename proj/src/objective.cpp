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

#include "siteselect/objective.hpp"

#include <algorithm>

#include "siteselect/error.hpp"

namespace siteselect {

FitnessEvaluator::FitnessEvaluator(const OverlapMatrix& overlap,
                                   std::vector<double> weights)
    : overlap_(&overlap), weights_(std::move(weights)) {
  if (weights_.size() != overlap.size()) {
    throw InvalidArgument("fitness weights must be indexed like the overlap matrix");
  }
}

ScoreBreakdown FitnessEvaluator::breakdown(
    std::span<const std::size_t> sorted_selection) const {
  ScoreBreakdown out;
  for (std::size_t i : sorted_selection) out.gross_exposures += weights_[i];
  for (std::size_t a = 0; a < sorted_selection.size(); ++a) {
    const std::size_t i = sorted_selection[a];
    for (std::size_t b = a + 1; b < sorted_selection.size(); ++b) {
      const std::size_t j = sorted_selection[b];
      out.overlap_deduction += overlap_->at(i, j) * std::min(weights_[i], weights_[j]);
    }
  }
  out.net_score = out.gross_exposures - out.overlap_deduction;
  return out;
}

namespace {

struct Resolved {
  std::vector<std::size_t> indices;  // sorted matrix indices
  std::vector<double> weights;       // indexed like the matrix, 0 elsewhere
};

Resolved resolve(std::span<const std::string> selection, const OverlapMatrix& overlap,
                 const SiteWeights& weights) {
  Resolved r;
  r.weights.assign(overlap.size(), 0.0);
  for (const auto& id : selection) {
    const auto idx = overlap.index_of(id);
    if (!idx) throw InvalidArgument("site '" + id + "' missing from overlap matrix");
    auto w = weights.find(id);
    if (w == weights.end()) throw InvalidArgument("site '" + id + "' has no weight");
    r.indices.push_back(*idx);
    r.weights[*idx] = w->second;
  }
  std::sort(r.indices.begin(), r.indices.end());
  if (std::adjacent_find(r.indices.begin(), r.indices.end()) != r.indices.end()) {
    throw InvalidArgument("selection lists a site twice");
  }
  return r;
}

}  // namespace

ScoreBreakdown score(std::span<const std::string> selection,
                     const OverlapMatrix& overlap, const SiteWeights& weights) {
  Resolved r = resolve(selection, overlap, weights);
  return FitnessEvaluator(overlap, std::move(r.weights)).breakdown(r.indices);
}

double fitness(std::span<const std::string> selection, const OverlapMatrix& overlap,
               const SiteWeights& weights) {
  return score(selection, overlap, weights).net_score;
}

std::vector<std::string> naive_baseline(const WebsiteNetwork& net,
                                        std::span<const std::string> feasible,
                                        std::size_t m) {
  std::vector<std::pair<double, std::string>> ranked;
  for (const auto& id : feasible) {
    const Website* w = net.find(id);
    if (w == nullptr || !w->reach_pct) {
      throw InvalidArgument("feasible site '" + id + "' has no reach");
    }
    ranked.emplace_back(*w->reach_pct, id);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (ranked.size() > m) ranked.resize(m);
  std::vector<std::string> out;
  for (auto& [_, id] : ranked) out.push_back(std::move(id));
  std::sort(out.begin(), out.end());
  return out;
}

PlanMetrics plan_metrics(std::span<const std::string> selection,
                         const OverlapMatrix& overlap, const WebsiteNetwork& net,
                         std::span<const std::string> feasible,
                         const SiteWeights& weights) {
  PlanMetrics pm;
  pm.selection.assign(selection.begin(), selection.end());
  std::sort(pm.selection.begin(), pm.selection.end());
  const ScoreBreakdown chosen = score(pm.selection, overlap, weights);
  pm.gross_exposures = chosen.gross_exposures;
  pm.overlap_deduction = chosen.overlap_deduction;
  pm.net_score = chosen.net_score;
  pm.baseline_selection = naive_baseline(net, feasible, selection.size());
  pm.naive_baseline = score(pm.baseline_selection, overlap, weights);
  pm.overlap_avoided = pm.naive_baseline.overlap_deduction - pm.overlap_deduction;
  return pm;
}

}  // namespace siteselect
