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

// Python bindings. Structured values cross the boundary as JSON text; the
// package's __init__.py turns them into dicts.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siteselect/campaign.hpp"
#include "siteselect/constraints.hpp"
#include "siteselect/error.hpp"
#include "siteselect/ga.hpp"
#include "siteselect/ingestion.hpp"
#include "siteselect/network.hpp"
#include "siteselect/objective.hpp"
#include "siteselect/oracle.hpp"
#include "siteselect/overlap.hpp"
#include "siteselect/serialization.hpp"
#include "siteselect/service.hpp"

namespace py = pybind11;
namespace ss = siteselect;
using nlohmann::json;

namespace {

ss::CampaignSpec campaign_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ss::ParseError("malformed campaign JSON at byte " + std::to_string(e.byte));
  }
  auto decoded = ss::decode_campaign(doc);
  if (!decoded.errors.empty()) {
    std::string msg = "invalid campaign:";
    for (const auto& e : decoded.errors) msg += " " + e.field + ": " + e.message + ";";
    throw ss::InvalidArgument(msg);
  }
  return decoded.spec;
}

std::vector<std::string> node_ids(const ss::WebsiteNetwork& net) {
  std::vector<std::string> ids;
  for (const auto& w : net.nodes()) ids.push_back(w.id);
  return ids;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Overlap-aware website selection for display campaigns.";

  auto base = py::register_exception<ss::Error>(m, "SiteselectError");
  py::register_exception<ss::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ss::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ss::InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<ss::GuardExceeded>(m, "GuardExceeded", base.ptr());

  py::class_<ss::WebsiteNetwork>(m, "Network")
      .def_static(
          "from_json", [](const std::string& text) { return ss::parse_network(text); },
          py::arg("text"))
      .def("to_json", &ss::serialize_network)
      .def_property_readonly("node_count", &ss::WebsiteNetwork::node_count)
      .def_property_readonly("edge_count", &ss::WebsiteNetwork::edge_count)
      .def_property_readonly("ids", &node_ids)
      .def("content_hash", &ss::content_hash)
      .def("validate",
           [](const ss::WebsiteNetwork& net) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : ss::validate_network(net).violations) {
               out.emplace_back(v.subject, v.message);
             }
             return out;
           })
      .def("prune", &ss::prune)
      .def("__eq__", [](const ss::WebsiteNetwork& a, const ss::WebsiteNetwork& b) {
        return a == b;
      })
      .def("__repr__", [](const ss::WebsiteNetwork& net) {
        return "<Network " + std::to_string(net.node_count()) + " nodes, " +
               std::to_string(net.edge_count()) + " edges>";
      });

  py::class_<ss::OverlapMatrix>(m, "OverlapMatrix")
      .def_property_readonly("ids", &ss::OverlapMatrix::ids)
      .def("__len__", &ss::OverlapMatrix::size)
      .def("at", py::overload_cast<std::string_view, std::string_view>(
                     &ss::OverlapMatrix::at, py::const_))
      .def("rows", [](const ss::OverlapMatrix& o) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < o.size(); ++i) {
          rows.emplace_back(o.row(i).begin(), o.row(i).end());
        }
        return rows;
      });

  m.def(
      "overlap_matrix",
      [](const ss::WebsiteNetwork& net) {
        py::gil_scoped_release release;
        return ss::overlap_matrix(net);
      },
      py::arg("network"));
  m.def(
      "max_product_path",
      [](const ss::WebsiteNetwork& net, const std::string& a, const std::string& b) {
        const auto r = ss::max_product_path(ss::symmetrize(net), a, b);
        return py::make_tuple(r.overlap, r.path);
      },
      py::arg("network"), py::arg("source"), py::arg("target"));
  m.def(
      "enumerate_path_overlap",
      [](const ss::WebsiteNetwork& net, const std::string& a, const std::string& b) {
        return ss::oracle::enumerate_path_overlap(ss::symmetrize(net), a, b);
      },
      py::arg("network"), py::arg("source"), py::arg("target"));

  m.def(
      "demographic_filter",
      [](const ss::WebsiteNetwork& net, std::set<std::string> age,
         std::set<std::string> income) {
        return ss::demographic_filter(net, {std::move(age), std::move(income)});
      },
      py::arg("network"), py::arg("age") = std::set<std::string>{},
      py::arg("income") = std::set<std::string>{});
  m.def(
      "feasible_sites",
      [](const ss::WebsiteNetwork& net, std::set<std::string> age,
         std::set<std::string> income) {
        return ss::feasible_sites(net, {std::move(age), std::move(income)});
      },
      py::arg("network"), py::arg("age") = std::set<std::string>{},
      py::arg("income") = std::set<std::string>{});
  m.def(
      "cost_model",
      [](const ss::WebsiteNetwork& net) {
        const ss::CostModel costs = ss::build_cost_model(net);
        return std::map<std::string, double>(costs.entries().begin(), costs.entries().end());
      },
      py::arg("network"));
  m.def("impressions_per_site", &ss::impressions_per_site, py::arg("budget_usd"),
        py::arg("num_sites"), py::arg("cpm_usd"));

  m.def(
      "score_json",
      [](const ss::WebsiteNetwork& net, const std::vector<std::string>& selection,
         const std::string& campaign) {
        const auto spec = campaign_from_text(campaign);
        const auto o = ss::overlap_matrix(net);
        return json(ss::score(selection, o, ss::site_weights(net, spec))).dump();
      },
      py::arg("network"), py::arg("selection"), py::arg("campaign"));

  m.def(
      "plan_json",
      [](const ss::WebsiteNetwork& net, const std::string& campaign,
         std::function<void(int, double, double)> progress) {
        const auto spec = campaign_from_text(campaign);
        ss::ProgressCallback cb;
        if (progress) {
          cb = [&progress](const ss::GenerationStats& g) {
            py::gil_scoped_acquire acquire;
            progress(g.generation, g.best_fitness, g.mean_fitness);
          };
        }
        py::gil_scoped_release release;
        const auto o = ss::overlap_matrix(net);
        return ss::result_to_json_text(ss::plan_campaign(net, o, spec, cb));
      },
      py::arg("network"), py::arg("campaign"), py::arg("progress") = nullptr);

  m.def(
      "exhaustive_json",
      [](const ss::WebsiteNetwork& net, const std::string& campaign) {
        const auto spec = campaign_from_text(campaign);
        py::gil_scoped_release release;
        const auto o = ss::overlap_matrix(net);
        const auto r = ss::oracle::exhaustive_optimize(
            net, o, ss::feasible_sites(net, spec.targeting), spec);
        return json{{"selection", r.selection}, {"fitness", r.fitness}}.dump();
      },
      py::arg("network"), py::arg("campaign"));

  m.def(
      "generate_synthetic",
      [](const std::string& config, std::uint64_t seed) {
        auto data = ss::generate_synthetic(ss::parse_synthetic_config(config), seed);
        return py::make_tuple(std::move(data.network),
                              ss::serialize_crawl_records(data.records));
      },
      py::arg("config") = "{}", py::arg("seed") = 0);
  m.def(
      "build_from_crawl",
      [](const std::string& records, const std::string& seed_domain,
         std::size_t max_nodes) {
        return ss::build_from_crawl(ss::parse_crawl_records(records), seed_domain,
                                    max_nodes);
      },
      py::arg("records"), py::arg("seed_domain"), py::arg("max_nodes"));

  py::class_<ss::PlannerService>(m, "PlannerService")
      .def(py::init([](unsigned max_jobs) {
             return std::make_unique<ss::PlannerService>(ss::ServiceOptions{max_jobs, {}});
           }),
           py::arg("max_concurrent_jobs") = 0)
      .def("put_network",
           [](ss::PlannerService& s, const std::string& body) {
             const auto r = s.put_network(body);
             return py::make_tuple(r.status, r.body);
           })
      .def("get_network",
           [](const ss::PlannerService& s) {
             const auto r = s.get_network();
             return py::make_tuple(r.status, r.body);
           })
      .def("submit_job",
           [](ss::PlannerService& s, const std::string& body) {
             const auto r = s.submit_job(body);
             return py::make_tuple(r.status, r.body);
           })
      .def("get_job",
           [](const ss::PlannerService& s, const std::string& id) {
             const auto r = s.get_job(id);
             return py::make_tuple(r.status, r.body);
           })
      .def(
          "stream_text",
          [](const ss::PlannerService& s, const std::string& id) {
            return s.stream_text(id);
          },
          py::call_guard<py::gil_scoped_release>());
}
