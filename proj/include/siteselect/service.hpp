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

#ifndef SITESELECT_SERVICE_HPP_
#define SITESELECT_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/campaign.hpp"
#include "siteselect/ga.hpp"

namespace siteselect {

enum class JobState { kQueued, kRunning, kDone, kFailed };

// "queued" | "running" | "done" | "failed"
std::string_view to_string(JobState state);

struct JobSnapshot {
  std::string id;
  JobState state = JobState::kQueued;
  CampaignSpec spec;  // seed always filled in
  std::vector<GenerationStats> history;
  std::optional<OptimizationResult> result;
  std::optional<std::string> error;
};

struct ServiceOptions {
  unsigned max_concurrent_jobs = 0;  // 0: one per hardware thread
  // Terminal job records are appended here as JSON lines and reloaded on
  // start-up.
  std::optional<std::filesystem::path> journal_path;
};

// Status code plus JSON body, as served over HTTP.
struct ApiResponse {
  int status = 200;
  std::string body;
};

// Planner HTTP facade.
//
//   PUT  /network          load a network file (atomic swap)
//   GET  /network          nodes with cpm, edges, bucket vocabulary
//   POST /jobs             submit a CampaignSpec -> 202 {"job_id", "seed"}
//   GET  /jobs/{id}        job record
//   GET  /jobs/{id}/stream NDJSON: one line per generation, then
//                          {"done": true, "result": ...} (or "error")
//
// The handler methods are usable without a socket; serve() and friends put
// them behind cpp-httplib.
class PlannerService {
 public:
  explicit PlannerService(ServiceOptions options = {});
  ~PlannerService();

  PlannerService(const PlannerService&) = delete;
  PlannerService& operator=(const PlannerService&) = delete;

  ApiResponse put_network(std::string_view body);
  ApiResponse get_network() const;
  ApiResponse submit_job(std::string_view body);
  ApiResponse get_job(std::string_view id) const;

  std::optional<JobSnapshot> job(std::string_view id) const;
  // Blocks until the job is done or failed; nullopt for an unknown id.
  std::optional<JobSnapshot> wait(std::string_view id) const;
  // The full NDJSON feed of a finished job (blocks until it finishes).
  std::optional<std::string> stream_text(std::string_view id) const;

  // Blocking HTTP server.
  bool serve(const std::string& host, int port);
  // Test-friendly split of serve(): bind, then listen on another thread.
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace siteselect

#endif  // SITESELECT_SERVICE_HPP_
