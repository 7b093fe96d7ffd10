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

#include "siteselect/service.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "siteselect/constraints.hpp"
#include "siteselect/error.hpp"
#include "siteselect/network.hpp"
#include "siteselect/overlap.hpp"
#include "siteselect/serialization.hpp"

namespace siteselect {

using nlohmann::json;

std::string_view to_string(JobState state) {
  switch (state) {
    case JobState::kQueued:
      return "queued";
    case JobState::kRunning:
      return "running";
    case JobState::kDone:
      return "done";
    case JobState::kFailed:
      return "failed";
  }
  return "failed";
}

namespace {

std::optional<JobState> parse_job_state(std::string_view s) {
  for (auto st : {JobState::kQueued, JobState::kRunning, JobState::kDone,
                  JobState::kFailed}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

bool terminal(JobState s) { return s == JobState::kDone || s == JobState::kFailed; }

struct LoadedNetwork {
  WebsiteNetwork net;
  std::string hash;
  BucketVocabulary vocab;
  std::optional<CostModel> costs;
};

struct Job {
  std::string id;
  CampaignSpec spec;
  std::shared_ptr<const LoadedNetwork> network;
  std::vector<std::string> feasible;

  mutable std::mutex mu;
  mutable std::condition_variable cv;
  JobState state = JobState::kQueued;
  std::vector<GenerationStats> history;
  std::optional<OptimizationResult> result;
  std::optional<std::string> error;

  JobSnapshot snapshot() const {
    std::lock_guard lock(mu);
    return {id, state, spec, history, result, error};
  }
};

json error_body(std::string_view message) { return json{{"error", message}}; }

ApiResponse respond(int status, const json& body) { return {status, body.dump()}; }

json job_json(const JobSnapshot& s) {
  json j{{"job_id", s.id},
         {"state", to_string(s.state)},
         {"spec", s.spec},
         {"history", s.history}};
  if (s.result) j["result"] = *s.result;
  if (s.error) j["error"] = *s.error;
  return j;
}

json buckets_json(const BucketVocabulary& v) {
  return json{{"age", v.age}, {"income", v.income}};
}

json summary_json(const LoadedNetwork& ln) {
  return json{{"content_hash", ln.hash},
              {"node_count", ln.net.node_count()},
              {"edge_count", ln.net.edge_count()},
              {"buckets", buckets_json(ln.vocab)}};
}

std::string terminal_line(const JobSnapshot& s) {
  json j{{"done", true}};
  if (s.result) j["result"] = *s.result;
  if (s.error) j["error"] = *s.error;
  return j.dump() + "\n";
}

std::string generation_line(const GenerationStats& g) { return json(g).dump() + "\n"; }

}  // namespace

struct PlannerService::Impl {
  explicit Impl(ServiceOptions opts) : options(std::move(opts)) {
    unsigned workers = options.max_concurrent_jobs;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (options.journal_path) restore_journal();
    for (unsigned i = 0; i < workers; ++i) {
      pool.emplace_back([this] { worker_loop(); });
    }
  }

  ~Impl() {
    server.stop();
    {
      std::lock_guard lock(queue_mu);
      stopping = true;
    }
    queue_cv.notify_all();
    for (auto& t : pool) t.join();
  }

  ServiceOptions options;
  PlannerService* owner = nullptr;  // routes call back into the public API
  httplib::Server server;

  mutable std::mutex network_mu;
  std::shared_ptr<const LoadedNetwork> network;

  struct MatrixSlot {
    std::once_flag once;
    OverlapMatrix matrix;
  };
  std::mutex cache_mu;
  std::map<std::string, std::shared_ptr<MatrixSlot>> matrix_cache;

  mutable std::mutex jobs_mu;
  std::map<std::string, std::shared_ptr<Job>, std::less<>> jobs;
  std::uint64_t next_job = 1;

  std::mutex queue_mu;
  std::condition_variable queue_cv;
  std::deque<std::shared_ptr<Job>> queue;
  bool stopping = false;
  std::vector<std::thread> pool;

  std::mutex journal_mu;

  std::shared_ptr<const LoadedNetwork> current_network() const {
    std::lock_guard lock(network_mu);
    return network;
  }

  std::shared_ptr<Job> find_job(std::string_view id) const {
    std::lock_guard lock(jobs_mu);
    auto it = jobs.find(id);
    return it == jobs.end() ? nullptr : it->second;
  }

  const OverlapMatrix& matrix_for(const LoadedNetwork& ln) {
    std::shared_ptr<MatrixSlot> slot;
    {
      std::lock_guard lock(cache_mu);
      auto& entry = matrix_cache[ln.hash];
      if (!entry) entry = std::make_shared<MatrixSlot>();
      slot = entry;
    }
    std::call_once(slot->once, [&] { slot->matrix = overlap_matrix(ln.net); });
    return slot->matrix;
  }

  void worker_loop() {
    for (;;) {
      std::shared_ptr<Job> job;
      {
        std::unique_lock lock(queue_mu);
        queue_cv.wait(lock, [this] { return stopping || !queue.empty(); });
        if (stopping) return;
        job = std::move(queue.front());
        queue.pop_front();
      }
      run(*job);
    }
  }

  void run(Job& job) {
    {
      std::lock_guard lock(job.mu);
      job.state = JobState::kRunning;
    }
    job.cv.notify_all();
    try {
      const OverlapMatrix& matrix = matrix_for(*job.network);
      auto on_generation = [&job](const GenerationStats& g) {
        {
          std::lock_guard lock(job.mu);
          job.history.push_back(g);
        }
        job.cv.notify_all();
      };
      OptimizationResult result =
          optimize(job.network->net, matrix, job.feasible, job.spec, job.spec.ga_params,
                   *job.spec.seed, on_generation);
      std::lock_guard lock(job.mu);
      job.result = std::move(result);
      job.state = JobState::kDone;
    } catch (const std::exception& e) {
      std::lock_guard lock(job.mu);
      job.error = e.what();
      job.state = JobState::kFailed;
    }
    job.cv.notify_all();
    append_journal(job.snapshot());
  }

  void append_journal(const JobSnapshot& s) {
    if (!options.journal_path) return;
    std::lock_guard lock(journal_mu);
    std::ofstream out(*options.journal_path, std::ios::app);
    out << job_json(s).dump() << "\n";
  }

  void restore_journal() {
    std::ifstream in(*options.journal_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const json j = json::parse(line);
        auto job = std::make_shared<Job>();
        job->id = j.at("job_id").get<std::string>();
        auto decoded = decode_campaign(j.at("spec"));
        job->spec = decoded.spec;
        const auto state = parse_job_state(j.at("state").get<std::string>());
        if (!state || !terminal(*state)) continue;
        job->state = *state;
        job->history = j.at("history").get<std::vector<GenerationStats>>();
        if (j.contains("result")) job->result = j["result"].get<OptimizationResult>();
        if (j.contains("error")) job->error = j["error"].get<std::string>();
        unsigned long long n = 0;
        if (std::sscanf(job->id.c_str(), "job-%llu", &n) == 1) {
          next_job = std::max<std::uint64_t>(next_job, n + 1);
        }
        jobs[job->id] = std::move(job);
      } catch (const std::exception&) {
        // A torn trailing line from a crash is skipped.
      }
    }
  }

  std::string new_job_id() {
    char buf[32];
    std::snprintf(buf, sizeof buf, "job-%06llu",
                  static_cast<unsigned long long>(next_job++));
    return buf;
  }

  // Seeds stay below 2^53 so JavaScript clients read them exactly.
  static std::uint64_t fresh_seed() {
    std::random_device rd;
    const std::uint64_t hi = rd();
    const std::uint64_t lo = rd();
    return ((hi << 32) | lo) & ((std::uint64_t{1} << 53) - 1);
  }

  void install_routes();
};

PlannerService::PlannerService(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {
  impl_->owner = this;
  impl_->install_routes();
}

PlannerService::~PlannerService() = default;

ApiResponse PlannerService::put_network(std::string_view body) {
  auto loaded = std::make_shared<LoadedNetwork>();
  try {
    loaded->net = parse_network(body);
  } catch (const ParseError& e) {
    return respond(400, error_body(e.what()));
  }
  loaded->hash = content_hash(loaded->net);
  loaded->vocab = bucket_vocabulary(loaded->net);
  try {
    loaded->costs = build_cost_model(loaded->net);
  } catch (const InvalidArgument&) {
    // No site has a reach: the network loads but every campaign is infeasible.
  }
  const json summary = summary_json(*loaded);
  {
    std::lock_guard lock(impl_->network_mu);
    impl_->network = std::move(loaded);
  }
  return respond(200, summary);
}

ApiResponse PlannerService::get_network() const {
  const auto ln = impl_->current_network();
  if (!ln) return respond(404, error_body("no network loaded"));
  json body = summary_json(*ln);
  json nodes = json::array();
  for (const Website& w : ln->net.nodes()) {
    json n{{"id", w.id},
           {"domain", w.domain},
           {"reach_pct", w.reach_pct ? json(*w.reach_pct) : json(nullptr)},
           {"age_ratios", w.age_ratios},
           {"income_ratios", w.income_ratios},
           {"banner_ads", w.banner_ads}};
    n["cpm_usd"] = ln->costs && ln->costs->contains(w.id) ? json(ln->costs->cpm(w.id))
                                                          : json(nullptr);
    nodes.push_back(std::move(n));
  }
  json edges = json::array();
  for (const Edge& e : ln->net.edges()) {
    edges.push_back(
        {{"src", e.src}, {"dst", e.dst}, {"alpha_pct", fraction_to_percent(e.alpha)}});
  }
  body["nodes"] = std::move(nodes);
  body["edges"] = std::move(edges);
  return respond(200, body);
}

ApiResponse PlannerService::submit_job(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    return respond(400, error_body("malformed JSON at byte " + std::to_string(e.byte)));
  }
  DecodedCampaign decoded = decode_campaign(doc);
  if (!decoded.errors.empty()) {
    json errors = json::array();
    for (const auto& e : decoded.errors) {
      errors.push_back({{"field", e.field}, {"message", e.message}});
    }
    return respond(400, json{{"error", "invalid campaign"}, {"errors", errors}});
  }
  const auto ln = impl_->current_network();
  if (!ln) return respond(409, error_body("no network loaded"));

  auto job = std::make_shared<Job>();
  job->spec = std::move(decoded.spec);
  job->network = ln;
  try {
    job->feasible = feasible_sites(ln->net, job->spec.targeting);
  } catch (const InvalidArgument& e) {
    return respond(400, json{{"error", "invalid campaign"},
                             {"errors", json::array({{{"field", "targeting"},
                                                      {"message", e.what()}}})}});
  }
  const auto feasible_count = job->feasible.size();
  if (feasible_count < static_cast<std::size_t>(job->spec.num_sites)) {
    return respond(422, json{{"error", "infeasible: " + std::to_string(feasible_count) +
                                           " feasible sites"},
                             {"feasible_count", feasible_count}});
  }
  if (!job->spec.seed) job->spec.seed = Impl::fresh_seed();

  {
    std::lock_guard lock(impl_->jobs_mu);
    job->id = impl_->new_job_id();
    impl_->jobs[job->id] = job;
  }
  {
    std::lock_guard lock(impl_->queue_mu);
    impl_->queue.push_back(job);
  }
  impl_->queue_cv.notify_one();
  return respond(202, json{{"job_id", job->id}, {"seed", *job->spec.seed}});
}

ApiResponse PlannerService::get_job(std::string_view id) const {
  const auto snap = job(id);
  if (!snap) return respond(404, error_body("unknown job '" + std::string(id) + "'"));
  return respond(200, job_json(*snap));
}

std::optional<JobSnapshot> PlannerService::job(std::string_view id) const {
  const auto j = impl_->find_job(id);
  if (!j) return std::nullopt;
  return j->snapshot();
}

std::optional<JobSnapshot> PlannerService::wait(std::string_view id) const {
  const auto j = impl_->find_job(id);
  if (!j) return std::nullopt;
  {
    std::unique_lock lock(j->mu);
    j->cv.wait(lock, [&] { return terminal(j->state); });
  }
  return j->snapshot();
}

std::optional<std::string> PlannerService::stream_text(std::string_view id) const {
  const auto snap = wait(id);
  if (!snap) return std::nullopt;
  std::string out;
  for (const auto& g : snap->history) out += generation_line(g);
  out += terminal_line(*snap);
  return out;
}

void PlannerService::Impl::install_routes() {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  server.Put("/network", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, owner->put_network(req.body));
  });
  server.Get("/network", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, owner->get_network());
  });
  server.Post("/jobs", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, owner->submit_job(req.body));
  });
  server.Get(R"(/jobs/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, owner->get_job(req.matches[1].str()));
             });
  server.Get(R"(/jobs/([^/]+)/stream)",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               auto job = find_job(req.matches[1].str());
               if (!job) {
                 send(res, respond(404, error_body("unknown job")));
                 return;
               }
               // Replay everything recorded so far, then follow new generations.
               auto sent = std::make_shared<std::size_t>(0);
               res.set_chunked_content_provider(
                   "application/x-ndjson",
                   [job, sent](std::size_t, httplib::DataSink& sink) {
                     std::unique_lock lock(job->mu);
                     job->cv.wait_for(lock, std::chrono::milliseconds(200), [&] {
                       return job->history.size() > *sent || terminal(job->state);
                     });
                     std::string chunk;
                     for (; *sent < job->history.size(); ++*sent) {
                       chunk += generation_line(job->history[*sent]);
                     }
                     const bool finished = terminal(job->state);
                     JobSnapshot snap;
                     if (finished) snap = {job->id, job->state, job->spec, {}, job->result,
                                           job->error};
                     lock.unlock();
                     if (finished) chunk += terminal_line(snap);
                     if (!chunk.empty() && !sink.write(chunk.data(), chunk.size())) {
                       return false;
                     }
                     if (finished) sink.done();
                     return true;
                   });
             });
}

bool PlannerService::serve(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int PlannerService::bind_to_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool PlannerService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void PlannerService::stop() { impl_->server.stop(); }

}  // namespace siteselect
