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

// JSON encodings of the campaign and result types shared by the CLI, the
// planner service and the Python module.

#ifndef SITESELECT_SERIALIZATION_HPP_
#define SITESELECT_SERIALIZATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "siteselect/campaign.hpp"
#include "siteselect/ga.hpp"
#include "siteselect/objective.hpp"

namespace siteselect {

void to_json(nlohmann::json& j, const Targeting& t);
void from_json(const nlohmann::json& j, Targeting& t);
void to_json(nlohmann::json& j, const GaParams& p);
void from_json(const nlohmann::json& j, GaParams& p);
void to_json(nlohmann::json& j, const CampaignSpec& s);
void to_json(nlohmann::json& j, const GenerationStats& g);
void from_json(const nlohmann::json& j, GenerationStats& g);
void to_json(nlohmann::json& j, const ScoreBreakdown& s);
void from_json(const nlohmann::json& j, ScoreBreakdown& s);
void to_json(nlohmann::json& j, const PlanMetrics& m);
void from_json(const nlohmann::json& j, PlanMetrics& m);
void to_json(nlohmann::json& j, const OptimizationResult& r);
void from_json(const nlohmann::json& j, OptimizationResult& r);

// Decoding of untrusted input: unknown fields and wrong types are collected
// as FieldErrors instead of thrown. Missing optional fields
// take their defaults.
struct DecodedCampaign {
  CampaignSpec spec;
  std::vector<FieldError> errors;  // decoding and validation problems
};
DecodedCampaign decode_campaign(const nlohmann::json& j);
GaParams decode_ga_params(const nlohmann::json& j, std::vector<FieldError>& errors);

// Stable textual form used by `--json` and the service.
std::string result_to_json_text(const OptimizationResult& r);
OptimizationResult result_from_json_text(std::string_view text);

}  // namespace siteselect

#endif  // SITESELECT_SERIALIZATION_HPP_
