# Copyright 2026 The siteselect Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Overlap-aware website selection for display campaigns."""

import json

from ._core import (
    GuardExceeded,
    InfeasibleError,
    InvalidArgument,
    Network,
    OverlapMatrix,
    ParseError,
    PlannerService,
    SiteselectError,
    build_from_crawl,
    cost_model,
    demographic_filter,
    enumerate_path_overlap,
    feasible_sites,
    impressions_per_site,
    max_product_path,
    overlap_matrix,
)
from . import _core

__all__ = [
    "GuardExceeded",
    "InfeasibleError",
    "InvalidArgument",
    "Network",
    "OverlapMatrix",
    "ParseError",
    "PlannerService",
    "SiteselectError",
    "build_from_crawl",
    "cost_model",
    "demographic_filter",
    "enumerate_path_overlap",
    "exhaustive_optimize",
    "feasible_sites",
    "generate_synthetic",
    "impressions_per_site",
    "load_network",
    "max_product_path",
    "optimize",
    "overlap_matrix",
    "score",
]


def load_network(path):
    with open(path, encoding="utf-8") as f:
        return Network.from_json(f.read())


def optimize(network, campaign, progress=None):
    """Run the GA for a campaign dict; returns the result as a dict.

    ``progress(generation, best_fitness, mean_fitness)`` is called once per
    generation.
    """
    return json.loads(_core.plan_json(network, json.dumps(campaign), progress))


def exhaustive_optimize(network, campaign):
    return json.loads(_core.exhaustive_json(network, json.dumps(campaign)))


def score(network, selection, campaign):
    return json.loads(_core.score_json(network, list(selection), json.dumps(campaign)))


def generate_synthetic(config=None, seed=0):
    """Returns ``(network, crawl_records)`` with the records as a dict."""
    network, records = _core.generate_synthetic(json.dumps(config or {}), seed)
    return network, json.loads(records)
