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

#ifndef SITESELECT_OVERLAP_HPP_
#define SITESELECT_OVERLAP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "siteselect/network.hpp"

namespace siteselect {

// Undirected view of a WebsiteNetwork. Node indices follow the network's
// id order, so index order is lexicographic id order.
class OverlapGraph {
 public:
  struct Neighbor {
    std::size_t node;
    double weight;  // in (0, 1]
  };

  OverlapGraph() = default;
  OverlapGraph(std::vector<std::string> ids,
               std::vector<std::vector<Neighbor>> adjacency);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  // Neighbours sorted by node index.
  std::span<const Neighbor> neighbors(std::size_t i) const { return adjacency_[i]; }
  // Undirected weight, or nullopt if the pair is not adjacent.
  std::optional<double> weight(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// w(i, j) = max(alpha(i->j), alpha(j->i)) with a missing direction read as 0.
OverlapGraph symmetrize(const WebsiteNetwork& net);

struct PathResult {
  double overlap = 0.0;
  std::vector<std::string> path;  // empty when no path exists
};

// Best path by product of weights. Ties on the product prefer fewer hops,
// then the lexicographically smaller id sequence. Throws InvalidArgument on
// an unknown id.
PathResult max_product_path(const OverlapGraph& g, std::string_view from,
                            std::string_view to);

// Symmetric n x n matrix of pairwise overlaps, indexed like the network.
class OverlapMatrix {
 public:
  OverlapMatrix() = default;
  OverlapMatrix(std::vector<std::string> ids, std::vector<double> values);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

  double at(std::size_t i, std::size_t j) const { return values_[i * ids_.size() + j]; }
  // Throws InvalidArgument on an unknown id.
  double at(std::string_view a, std::string_view b) const;

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * ids_.size(), ids_.size());
  }
  std::span<const double> values() const { return values_; }

  bool operator==(const OverlapMatrix&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;  // row-major
};

// One best-first search per source. Entry (i, j) with i < j comes from the
// search rooted at i and is mirrored, so the matrix is exactly symmetric.
OverlapMatrix overlap_matrix(const WebsiteNetwork& net);
OverlapMatrix overlap_matrix(const OverlapGraph& g);

// Matrix cache file: {"network_hash", "ids", "values"} with row-major values.
std::string serialize_matrix_cache(const OverlapMatrix& m,
                                   std::string_view network_hash);
// Throws ParseError if the file is malformed or was computed for a network
// with a different content hash.
OverlapMatrix load_matrix_cache(std::string_view bytes, const WebsiteNetwork& net);

}  // namespace siteselect

#endif  // SITESELECT_OVERLAP_HPP_
