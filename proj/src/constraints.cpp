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

#include <algorithm>
#include <cmath>

#include "siteselect/error.hpp"

namespace siteselect {

BucketVocabulary bucket_vocabulary(const WebsiteNetwork& net) {
  BucketVocabulary vocab;
  for (const Website& w : net.nodes()) {
    for (const auto& [label, _] : w.age_ratios) vocab.age.insert(label);
    for (const auto& [label, _] : w.income_ratios) vocab.income.insert(label);
  }
  return vocab;
}

namespace {

bool above_average_in_any(const RatioProfile& profile,
                          const std::set<std::string>& buckets) {
  for (const auto& label : buckets) {
    auto it = profile.find(label);
    if (it != profile.end() && it->second > 1.0) return true;
  }
  return false;
}

void check_labels(const std::set<std::string>& requested,
                  const std::set<std::string>& known, std::string_view dimension) {
  for (const auto& label : requested) {
    if (!known.contains(label)) {
      throw InvalidArgument("unknown " + std::string(dimension) + " bucket '" +
                            label + "'");
    }
  }
}

}  // namespace

std::vector<std::string> demographic_filter(const WebsiteNetwork& net,
                                            const Targeting& t) {
  if (!t.empty()) {
    const BucketVocabulary vocab = bucket_vocabulary(net);
    check_labels(t.age_buckets, vocab.age, "age");
    check_labels(t.income_buckets, vocab.income, "income");
  }
  std::vector<std::string> out;
  for (const Website& w : net.nodes()) {
    if (!t.age_buckets.empty() && !above_average_in_any(w.age_ratios, t.age_buckets)) {
      continue;
    }
    if (!t.income_buckets.empty() &&
        !above_average_in_any(w.income_ratios, t.income_buckets)) {
      continue;
    }
    out.push_back(w.id);
  }
  return out;
}

double CostModel::cpm(std::string_view id) const {
  auto it = cpm_.find(id);
  if (it == cpm_.end()) {
    throw InvalidArgument("no cost for site '" + std::string(id) + "'");
  }
  return it->second;
}

CostModel build_cost_model(const WebsiteNetwork& net) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Website& w : net.nodes()) {
    if (!w.reach_pct) continue;
    lo = std::min(lo, *w.reach_pct);
    hi = std::max(hi, *w.reach_pct);
  }
  if (lo > hi) throw InvalidArgument("cost model needs at least one site with reach");

  constexpr double kSpan = kMaxCpmUsd - kMinCpmUsd;
  std::map<std::string, double, std::less<>> cpm;
  for (const Website& w : net.nodes()) {
    if (!w.reach_pct) continue;
    // Normalize first so the top site lands on kMaxCpmUsd exactly.
    const double value = hi == lo
                             ? (kMinCpmUsd + kMaxCpmUsd) / 2.0
                             : kMinCpmUsd + kSpan * ((*w.reach_pct - lo) / (hi - lo));
    cpm.emplace(w.id, value);
  }
  return CostModel(std::move(cpm));
}

double impressions_per_site(double budget_usd, int m, double cpm_usd) {
  if (!(budget_usd > 0.0) || !std::isfinite(budget_usd)) {
    throw InvalidArgument("budget_usd must be > 0");
  }
  if (m < 1) throw InvalidArgument("m must be >= 1");
  if (!(cpm_usd > 0.0) || !std::isfinite(cpm_usd)) {
    throw InvalidArgument("cpm_usd must be > 0");
  }
  return budget_usd / m / cpm_usd * 1000.0;
}

}  // namespace siteselect
