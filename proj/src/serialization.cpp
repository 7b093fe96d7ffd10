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

#include "siteselect/serialization.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "siteselect/error.hpp"

namespace siteselect {

using nlohmann::json;

void to_json(json& j, const Targeting& t) {
  j = json{{"age_buckets", t.age_buckets}, {"income_buckets", t.income_buckets}};
}

void from_json(const json& j, Targeting& t) {
  t.age_buckets = j.value("age_buckets", std::set<std::string>{});
  t.income_buckets = j.value("income_buckets", std::set<std::string>{});
}

void to_json(json& j, const GaParams& p) {
  j = json{{"population_size", p.population_size},
           {"max_generations", p.max_generations},
           {"stall_generations", p.stall_generations},
           {"tournament_size", p.tournament_size},
           {"crossover_rate", p.crossover_rate},
           {"mutation_rate", p.mutation_rate},
           {"elite_count", p.elite_count}};
}

void from_json(const json& j, GaParams& p) {
  std::vector<FieldError> errors;
  p = decode_ga_params(j, errors);
  if (!errors.empty()) {
    throw ParseError(errors.front().field + ": " + errors.front().message);
  }
}

void to_json(json& j, const CampaignSpec& s) {
  j = json{{"budget_usd", s.budget_usd},
           {"num_sites", s.num_sites},
           {"targeting", s.targeting},
           {"objective_mode", to_string(s.objective_mode)},
           {"ga_params", s.ga_params}};
  j["seed"] = s.seed ? json(*s.seed) : json(nullptr);
}

void to_json(json& j, const GenerationStats& g) {
  j = json{{"generation", g.generation},
           {"best_fitness", g.best_fitness},
           {"mean_fitness", g.mean_fitness}};
}

void from_json(const json& j, GenerationStats& g) {
  j.at("generation").get_to(g.generation);
  j.at("best_fitness").get_to(g.best_fitness);
  j.at("mean_fitness").get_to(g.mean_fitness);
}

void to_json(json& j, const ScoreBreakdown& s) {
  j = json{{"gross_exposures", s.gross_exposures},
           {"overlap_deduction", s.overlap_deduction},
           {"net_score", s.net_score}};
}

void from_json(const json& j, ScoreBreakdown& s) {
  j.at("gross_exposures").get_to(s.gross_exposures);
  j.at("overlap_deduction").get_to(s.overlap_deduction);
  j.at("net_score").get_to(s.net_score);
}

void to_json(json& j, const PlanMetrics& m) {
  json baseline = m.naive_baseline;
  baseline["selection"] = m.baseline_selection;
  j = json{{"selection", m.selection},
           {"gross_exposures", m.gross_exposures},
           {"overlap_deduction", m.overlap_deduction},
           {"net_score", m.net_score},
           {"naive_baseline", std::move(baseline)},
           {"overlap_avoided", m.overlap_avoided}};
}

void from_json(const json& j, PlanMetrics& m) {
  j.at("selection").get_to(m.selection);
  j.at("gross_exposures").get_to(m.gross_exposures);
  j.at("overlap_deduction").get_to(m.overlap_deduction);
  j.at("net_score").get_to(m.net_score);
  j.at("naive_baseline").get_to(m.naive_baseline);
  j.at("naive_baseline").at("selection").get_to(m.baseline_selection);
  j.at("overlap_avoided").get_to(m.overlap_avoided);
}

void to_json(json& j, const OptimizationResult& r) {
  j = json{{"selection", r.selection},
           {"fitness", r.fitness},
           {"objective_mode", to_string(r.objective_mode)},
           {"seed", r.seed},
           {"params", r.params},
           {"metrics", r.metrics},
           {"history", r.history}};
}

void from_json(const json& j, OptimizationResult& r) {
  j.at("selection").get_to(r.selection);
  j.at("fitness").get_to(r.fitness);
  const auto mode = parse_objective_mode(j.at("objective_mode").get<std::string>());
  if (!mode) throw ParseError("unknown objective_mode");
  r.objective_mode = *mode;
  j.at("seed").get_to(r.seed);
  j.at("params").get_to(r.params);
  j.at("metrics").get_to(r.metrics);
  j.at("history").get_to(r.history);
}

namespace {

void read_int(const json& obj, const char* key, const std::string& prefix, int& out,
              std::vector<FieldError>& errors) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number_integer()) {
    errors.push_back({prefix + key, "must be an integer"});
    return;
  }
  const auto v = it->get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) {
    errors.push_back({prefix + key, "out of range"});
    return;
  }
  out = static_cast<int>(v);
}

void read_real(const json& obj, const char* key, const std::string& prefix,
               double& out, std::vector<FieldError>& errors) {
  auto it = obj.find(key);
  if (it == obj.end()) return;
  if (!it->is_number()) {
    errors.push_back({prefix + key, "must be a number"});
    return;
  }
  out = it->get<double>();
}

void read_buckets(const json& obj, const char* key, std::set<std::string>& out,
                  std::vector<FieldError>& errors) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return;
  const std::string field = std::string("targeting.") + key;
  if (!it->is_array()) {
    errors.push_back({field, "must be an array of bucket labels"});
    return;
  }
  for (const auto& label : *it) {
    if (!label.is_string()) {
      errors.push_back({field, "must be an array of bucket labels"});
      return;
    }
    out.insert(label.get<std::string>());
  }
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& prefix, std::vector<FieldError>& errors) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      errors.push_back({prefix + key, "unknown field"});
    }
  }
}

}  // namespace

GaParams decode_ga_params(const json& j, std::vector<FieldError>& errors) {
  GaParams p;
  if (j.is_null()) return p;
  if (!j.is_object()) {
    errors.push_back({"ga_params", "must be an object"});
    return p;
  }
  const std::string prefix = "ga_params.";
  reject_unknown(j,
                 {"population_size", "max_generations", "stall_generations",
                  "tournament_size", "crossover_rate", "mutation_rate", "elite_count"},
                 prefix, errors);
  read_int(j, "population_size", prefix, p.population_size, errors);
  read_int(j, "max_generations", prefix, p.max_generations, errors);
  read_int(j, "stall_generations", prefix, p.stall_generations, errors);
  read_int(j, "tournament_size", prefix, p.tournament_size, errors);
  read_real(j, "crossover_rate", prefix, p.crossover_rate, errors);
  read_real(j, "mutation_rate", prefix, p.mutation_rate, errors);
  read_int(j, "elite_count", prefix, p.elite_count, errors);
  return p;
}

DecodedCampaign decode_campaign(const json& j) {
  DecodedCampaign out;
  auto& errors = out.errors;
  if (!j.is_object()) {
    errors.push_back({"", "campaign must be a JSON object"});
    return out;
  }
  reject_unknown(j,
                 {"budget_usd", "num_sites", "targeting", "objective_mode",
                  "ga_params", "seed"},
                 "", errors);
  CampaignSpec& s = out.spec;

  if (!j.contains("budget_usd")) {
    errors.push_back({"budget_usd", "required"});
  } else {
    read_real(j, "budget_usd", "", s.budget_usd, errors);
  }
  if (!j.contains("num_sites")) {
    errors.push_back({"num_sites", "required"});
  } else {
    read_int(j, "num_sites", "", s.num_sites, errors);
  }
  if (auto it = j.find("targeting"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) {
      errors.push_back({"targeting", "must be an object"});
    } else {
      reject_unknown(*it, {"age_buckets", "income_buckets"}, "targeting.", errors);
      read_buckets(*it, "age_buckets", s.targeting.age_buckets, errors);
      read_buckets(*it, "income_buckets", s.targeting.income_buckets, errors);
    }
  }
  if (auto it = j.find("objective_mode"); it != j.end() && !it->is_null()) {
    const auto mode = it->is_string() ? parse_objective_mode(it->get<std::string>())
                                      : std::nullopt;
    if (!mode) {
      errors.push_back(
          {"objective_mode", "must be \"unique-impressions\" or \"unique-reach\""});
    } else {
      s.objective_mode = *mode;
    }
  }
  if (auto it = j.find("ga_params"); it != j.end()) {
    s.ga_params = decode_ga_params(*it, errors);
  }
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) {
      errors.push_back({"seed", "must be a non-negative integer"});
    } else {
      s.seed = it->get<std::uint64_t>();
    }
  }

  if (errors.empty()) {
    for (auto& e : s.validate()) errors.push_back(std::move(e));
  }
  return out;
}

std::string result_to_json_text(const OptimizationResult& r) {
  return json(r).dump(2) + "\n";
}

OptimizationResult result_from_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end()).get<OptimizationResult>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("optimization result: ") + e.what());
  }
}

}  // namespace siteselect
