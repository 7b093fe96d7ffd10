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

// siteselect: command-line front end.
//
// Exit codes: 0 success, 1 domain error (parse, validation, infeasible),
// 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siteselect/campaign.hpp"
#include "siteselect/constraints.hpp"
#include "siteselect/error.hpp"
#include "siteselect/ga.hpp"
#include "siteselect/ingestion.hpp"
#include "siteselect/network.hpp"
#include "siteselect/oracle.hpp"
#include "siteselect/overlap.hpp"
#include "siteselect/serialization.hpp"
#include "siteselect/service.hpp"

namespace {

using namespace siteselect;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("failed writing '" + path + "'");
}

std::string num(double v, const char* format = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

// Options shared by `optimize` and `oracle optimize`.
struct CampaignArgs {
  std::string network;
  double budget = 0.0;
  int sites = 0;
  std::vector<std::string> age;
  std::vector<std::string> income;
  std::string mode = "impressions";
  std::uint64_t seed = 0;
  bool json = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("network", network, "Network file")->required();
    cmd->add_option("--budget", budget, "Campaign budget in USD")->required();
    cmd->add_option("--sites", sites, "Number of sites to select")->required();
    cmd->add_option("--age", age, "Targeted age buckets");
    cmd->add_option("--income", income, "Targeted income buckets");
    cmd->add_option("--mode", mode, "Objective: impressions or reach")
        ->check(CLI::IsMember({"impressions", "reach", "unique-impressions",
                               "unique-reach"}));
    cmd->add_flag("--json", json, "Emit JSON");
  }

  CampaignSpec spec() const {
    CampaignSpec s;
    s.budget_usd = budget;
    s.num_sites = sites;
    s.targeting.age_buckets.insert(age.begin(), age.end());
    s.targeting.income_buckets.insert(income.begin(), income.end());
    s.objective_mode = *parse_objective_mode(mode);
    s.seed = seed;
    if (auto errors = s.validate(); !errors.empty()) {
      throw InvalidArgument(errors.front().field + ": " + errors.front().message);
    }
    return s;
  }
};

void print_plan(const OptimizationResult& r) {
  const PlanMetrics& m = r.metrics;
  std::cout << "selected sites (" << r.selection.size() << "): " << join(r.selection, ", ")
            << "\n"
            << "objective: " << to_string(r.objective_mode) << "\n"
            << "fitness: " << num(r.fitness) << "\n"
            << "gross exposures: " << num(m.gross_exposures) << "\n"
            << "overlap deduction: " << num(m.overlap_deduction) << "\n"
            << "naive top-reach baseline (" << join(m.baseline_selection, ", ")
            << "): net " << num(m.naive_baseline.net_score) << ", deduction "
            << num(m.naive_baseline.overlap_deduction) << "\n"
            << "overlap avoided: " << num(m.overlap_avoided) << "\n"
            << "generations: " << r.history.size() << " (seed " << r.seed << ")\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Overlap-aware website selection for ad campaigns"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a synthetic network");
  std::string gen_config;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  std::string gen_crawl_out;
  generate->add_option("--config", gen_config, "SyntheticConfig JSON file")->required();
  generate->add_option("--seed", gen_seed, "RNG seed")->required();
  generate->add_option("--out", gen_out, "Output network file")->required();
  generate->add_option("--crawl-out", gen_crawl_out, "Also write crawl records");

  // build
  auto* build = app.add_subcommand("build", "Build a network from crawl records");
  std::string build_records;
  std::string build_seed_domain;
  std::size_t build_max_nodes = 0;
  std::string build_out;
  build->add_option("--records", build_records, "Crawl-record file")->required();
  build->add_option("--seed-domain", build_seed_domain, "Expansion seed")->required();
  build->add_option("--max-nodes", build_max_nodes, "Node budget")->required();
  build->add_option("--out", build_out, "Output network file")->required();

  // validate
  auto* validate = app.add_subcommand("validate", "Check a network file");
  std::string validate_path;
  validate->add_option("network", validate_path, "Network file")->required();

  // overlap
  auto* overlap = app.add_subcommand("overlap", "Pairwise audience overlap");
  std::string overlap_path;
  std::vector<std::string> overlap_pair;
  std::string overlap_matrix_out;
  overlap->add_option("network", overlap_path, "Network file")->required();
  overlap->add_option("--pair", overlap_pair, "Two site ids")->expected(2);
  overlap->add_option("--matrix-out", overlap_matrix_out, "Write the matrix cache file");

  // optimize
  auto* optimize_cmd = app.add_subcommand("optimize", "Select sites with the GA");
  CampaignArgs opt_args;
  GaParams ga;
  std::string opt_matrix;
  opt_args.add_to(optimize_cmd);
  optimize_cmd->add_option("--seed", opt_args.seed, "RNG seed (default 0)");
  optimize_cmd->add_option("--matrix", opt_matrix, "Precomputed matrix cache file");
  optimize_cmd->add_option("--ga-population", ga.population_size);
  optimize_cmd->add_option("--ga-generations", ga.max_generations);
  optimize_cmd->add_option("--ga-stall", ga.stall_generations);
  optimize_cmd->add_option("--ga-tournament", ga.tournament_size);
  optimize_cmd->add_option("--ga-crossover", ga.crossover_rate);
  optimize_cmd->add_option("--ga-mutation", ga.mutation_rate);
  optimize_cmd->add_option("--ga-elite", ga.elite_count);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  auto* oracle_opt = oracle_cmd->add_subcommand("optimize", "Exhaustive subset search");
  CampaignArgs oracle_args;
  oracle_args.add_to(oracle_opt);
  auto* oracle_path = oracle_cmd->add_subcommand("path", "Enumerate simple paths");
  std::string path_network;
  std::string path_from;
  std::string path_to;
  oracle_path->add_option("network", path_network, "Network file")->required();
  oracle_path->add_option("from", path_from, "Site id")->required();
  oracle_path->add_option("to", path_to, "Site id")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Run the planner HTTP service");
  std::string listen = "127.0.0.1:8080";
  unsigned max_jobs = 0;
  std::string journal;
  std::string serve_network;
  serve->add_option("--listen", listen, "host:port");
  serve->add_option("--max-jobs", max_jobs, "Concurrent job limit (0 = cores)");
  serve->add_option("--journal", journal, "Append-only job journal");
  serve->add_option("--network", serve_network, "Network file to load at start");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate) {
      const SyntheticConfig cfg = parse_synthetic_config(read_file(gen_config));
      const SyntheticData data = generate_synthetic(cfg, gen_seed);
      write_file(gen_out, serialize_network(data.network));
      if (!gen_crawl_out.empty()) {
        write_file(gen_crawl_out, serialize_crawl_records(data.records));
      }
      std::cout << "wrote " << gen_out << ": " << data.network.node_count() << " nodes, "
                << data.network.edge_count() << " edges\n";
    } else if (*build) {
      const CrawlRecords records = parse_crawl_records(read_file(build_records));
      const WebsiteNetwork raw = build_from_crawl(records, build_seed_domain, build_max_nodes);
      const WebsiteNetwork net = prune(raw);
      write_file(build_out, serialize_network(net));
      std::cout << "wrote " << build_out << ": " << net.node_count() << " nodes, "
                << net.edge_count() << " edges (" << raw.node_count() - net.node_count()
                << " pruned)\n";
    } else if (*validate) {
      const WebsiteNetwork net = parse_network(read_file(validate_path));
      std::size_t incomplete = 0;
      for (const auto& w : net.nodes()) {
        if (!w.banner_ads || !w.has_complete_metrics()) ++incomplete;
      }
      std::cout << "ok: " << net.node_count() << " nodes, " << net.edge_count()
                << " edges, hash " << content_hash(net) << "\n";
      if (incomplete > 0) {
        std::cout << incomplete << " node(s) lack metrics or banner inventory\n";
      }
    } else if (*overlap) {
      const WebsiteNetwork net = parse_network(read_file(overlap_path));
      if (!overlap_pair.empty()) {
        const PathResult p = max_product_path(symmetrize(net), overlap_pair[0],
                                              overlap_pair[1]);
        std::cout << num(p.overlap, "%.6f") << "\n";
        std::cout << (p.path.empty() ? "(no path)" : join(p.path, " -> ")) << "\n";
      } else {
        const OverlapMatrix m = overlap_matrix(net);
        if (!overlap_matrix_out.empty()) {
          write_file(overlap_matrix_out, serialize_matrix_cache(m, content_hash(net)));
          std::cout << "wrote " << overlap_matrix_out << ": " << m.size() << "x"
                    << m.size() << " matrix\n";
        } else {
          std::cout << "id";
          for (const auto& id : m.ids()) std::cout << "\t" << id;
          std::cout << "\n";
          for (std::size_t i = 0; i < m.size(); ++i) {
            std::cout << m.ids()[i];
            for (double v : m.row(i)) std::cout << "\t" << num(v, "%.6f");
            std::cout << "\n";
          }
        }
      }
    } else if (*optimize_cmd) {
      const WebsiteNetwork net = parse_network(read_file(opt_args.network));
      CampaignSpec spec = opt_args.spec();
      spec.ga_params = ga;
      const OverlapMatrix m = opt_matrix.empty()
                                  ? overlap_matrix(net)
                                  : load_matrix_cache(read_file(opt_matrix), net);
      const OptimizationResult r = plan_campaign(net, m, spec);
      if (opt_args.json) {
        std::cout << result_to_json_text(r);
      } else {
        print_plan(r);
      }
    } else if (*oracle_opt) {
      const WebsiteNetwork net = parse_network(read_file(oracle_args.network));
      const CampaignSpec spec = oracle_args.spec();
      const OverlapMatrix m = overlap_matrix(net);
      const auto feasible = feasible_sites(net, spec.targeting);
      const auto best = oracle::exhaustive_optimize(net, m, feasible, spec);
      if (oracle_args.json) {
        nlohmann::json j{{"selection", best.selection}, {"fitness", best.fitness}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "optimal sites: " << join(best.selection, ", ") << "\n"
                  << "fitness: " << num(best.fitness) << "\n";
      }
    } else if (*oracle_path) {
      const WebsiteNetwork net = parse_network(read_file(path_network));
      const double v = oracle::enumerate_path_overlap(symmetrize(net), path_from, path_to);
      std::cout << num(v, "%.6f") << "\n";
    } else if (*serve) {
      const auto colon = listen.rfind(':');
      if (colon == std::string::npos) {
        std::cerr << "error: --listen expects host:port\n";
        return 2;
      }
      const std::string host = listen.substr(0, colon);
      const int port = std::stoi(listen.substr(colon + 1));
      ServiceOptions options;
      options.max_concurrent_jobs = max_jobs;
      if (!journal.empty()) options.journal_path = journal;
      PlannerService service(options);
      if (!serve_network.empty()) {
        const ApiResponse r = service.put_network(read_file(serve_network));
        if (r.status != 200) {
          std::cerr << "error: " << r.body << "\n";
          return 1;
        }
      }
      std::cerr << "listening on " << host << ":" << port << "\n";
      if (!service.serve(host, port)) {
        std::cerr << "error: cannot listen on " << listen << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
