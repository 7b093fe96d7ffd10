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

#include "siteselect/ga.hpp"

#include <numeric>

#include "selection_context.hpp"
#include "siteselect/error.hpp"

namespace siteselect {

namespace internal {

SelectionContext make_selection_context(const WebsiteNetwork& net,
                                        const OverlapMatrix& overlap,
                                        std::span<const std::string> feasible,
                                        const CampaignSpec& campaign) {
  if (const auto errors = campaign.validate(); !errors.empty()) {
    std::string msg;
    for (const auto& e : errors) {
      if (!msg.empty()) msg += "; ";
      msg += e.field + ": " + e.message;
    }
    throw InvalidArgument(msg);
  }
  if (overlap.size() != net.node_count()) {
    throw InvalidArgument("overlap matrix does not match the network");
  }
  SiteWeights weights = site_weights(net, campaign);

  std::vector<std::size_t> indices;
  for (const auto& id : feasible) {
    const auto idx = overlap.index_of(id);
    if (!idx) throw InvalidArgument("feasible site '" + id + "' not in the network");
    if (!weights.contains(id)) {
      throw InvalidArgument("feasible site '" + id + "' has no reach");
    }
    indices.push_back(*idx);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  const auto m = static_cast<std::size_t>(campaign.num_sites);
  if (indices.size() < m) throw InfeasibleError(indices.size(), m);

  std::vector<double> by_index(overlap.size(), 0.0);
  for (std::size_t i = 0; i < overlap.size(); ++i) {
    if (auto it = weights.find(overlap.ids()[i]); it != weights.end()) {
      by_index[i] = it->second;
    }
  }
  std::vector<std::string> ids;
  for (std::size_t i : indices) ids.push_back(overlap.ids()[i]);
  return SelectionContext{std::move(indices), std::move(ids), std::move(weights),
                          FitnessEvaluator(overlap, std::move(by_index)), m};
}

}  // namespace internal

namespace {

using Chromosome = std::vector<std::size_t>;

struct Individual {
  Chromosome genes;
  double fitness;
};

// Higher fitness first; equal fitness goes to the lexicographically smaller
// gene list, which is also the smaller id list.
bool ranks_before(const Individual& a, const Individual& b) {
  if (a.fitness != b.fitness) return a.fitness > b.fitness;
  return a.genes < b.genes;
}

Chromosome random_chromosome(std::span<const std::size_t> feasible, std::size_t m,
                             Rng& rng) {
  std::vector<std::size_t> pool(feasible.begin(), feasible.end());
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = k + rng.uniform_index(pool.size() - k);
    std::swap(pool[k], pool[pick]);
  }
  Chromosome c(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  std::sort(c.begin(), c.end());
  return c;
}

const Individual& tournament(const std::vector<Individual>& population, int size,
                             Rng& rng) {
  const Individual* winner = &population[rng.uniform_index(population.size())];
  for (int k = 1; k < size; ++k) {
    const Individual& challenger = population[rng.uniform_index(population.size())];
    if (ranks_before(challenger, *winner)) winner = &challenger;
  }
  return *winner;
}

GenerationStats summarize(int generation, const std::vector<Individual>& ranked) {
  double sum = 0.0;
  for (const auto& ind : ranked) sum += ind.fitness;
  return {generation, ranked.front().fitness,
          sum / static_cast<double>(ranked.size())};
}

}  // namespace

OptimizationResult optimize(const WebsiteNetwork& net, const OverlapMatrix& overlap,
                            std::span<const std::string> feasible,
                            const CampaignSpec& campaign, const GaParams& params,
                            std::uint64_t seed, const ProgressCallback& progress) {
  if (const auto errors = params.validate(); !errors.empty()) {
    throw InvalidArgument(errors.front().field + ": " + errors.front().message);
  }
  const internal::SelectionContext ctx =
      internal::make_selection_context(net, overlap, feasible, campaign);
  const std::size_t m = ctx.m;
  Rng rng(seed);

  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(params.population_size));
  if (ctx.feasible.size() == m) {
    // Only one chromosome exists.
    population.push_back({ctx.feasible, ctx.evaluator(ctx.feasible)});
  } else {
    for (int k = 0; k < params.population_size; ++k) {
      Chromosome genes = random_chromosome(ctx.feasible, m, rng);
      const double f = ctx.evaluator(genes);
      population.push_back({std::move(genes), f});
    }
  }

  OptimizationResult result;
  result.objective_mode = campaign.objective_mode;
  result.seed = seed;
  result.params = params;

  Individual best = population.front();
  int stall = 0;
  for (int generation = 0;; ++generation) {
    std::sort(population.begin(), population.end(), ranks_before);
    const GenerationStats stats = summarize(generation, population);
    result.history.push_back(stats);
    if (progress) progress(stats);

    if (generation == 0 || population.front().fitness > best.fitness) {
      best = population.front();
      stall = 0;
    } else {
      if (ranks_before(population.front(), best)) best = population.front();
      ++stall;
    }
    if (population.size() == 1 || generation + 1 >= params.max_generations ||
        stall >= params.stall_generations) {
      break;
    }

    std::vector<Individual> next;
    next.reserve(population.size());
    for (int e = 0; e < params.elite_count; ++e) next.push_back(population[e]);
    while (next.size() < population.size()) {
      const Individual& a = tournament(population, params.tournament_size, rng);
      const Individual& b = tournament(population, params.tournament_size, rng);
      Chromosome child = rng.bernoulli(params.crossover_rate)
                             ? crossover<std::size_t>(a.genes, b.genes, rng)
                             : a.genes;
      child = mutate<std::size_t>(child, ctx.feasible, params.mutation_rate, rng);
      const double f = ctx.evaluator(child);
      next.push_back({std::move(child), f});
    }
    population = std::move(next);
  }

  result.selection = ctx.ids_of(best.genes, overlap);
  result.fitness = best.fitness;
  result.metrics =
      plan_metrics(result.selection, overlap, net, ctx.feasible_ids, ctx.weights);
  return result;
}

OptimizationResult plan_campaign(const WebsiteNetwork& net, const OverlapMatrix& overlap,
                                 const CampaignSpec& campaign,
                                 const ProgressCallback& progress) {
  const auto feasible = feasible_sites(net, campaign.targeting);
  return optimize(net, overlap, feasible, campaign, campaign.ga_params,
                  campaign.seed.value_or(0), progress);
}

}  // namespace siteselect
