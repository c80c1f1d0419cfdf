// Copyright 2026 The etw Authors
//
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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etw/multigraph.hpp"

namespace etw {

struct GraphMetrics {
  std::vector<int> vertex_degree;  ///< |N({v})|
  std::vector<int> edge_degree;    ///< |E({v})| with multiplicity
  int max_vertex_degree = 0;
  int max_edge_degree = 0;
  /// Diameter of each connected component (unit lengths, multiplicity
  /// ignored), in the order of connected_components().
  std::vector<int> component_diameter;

  /// Largest component diameter; absent for the empty graph.
  std::optional<int> diameter() const;
};

GraphMetrics graph_metrics(const Multigraph& g);

struct CutQuantities {
  VertexSubset neighborhood;         ///< N_G(S)
  std::vector<Edge> boundary_edges;  ///< E_G(S), one entry per crossing pair
  std::int64_t boundary_size = 0;    ///< |E_G(S)| with multiplicity
  VertexSubset component;            ///< C_G(S, v)
};

/// Throws PreconditionError unless v is in S and S lies in V(G).
CutQuantities cut_quantities(const Multigraph& g, const VertexSubset& s, Vertex v);

/// |E_G(S)| for S given as a membership mask of size |G|.
std::int64_t boundary_edge_count(const Multigraph& g, const std::vector<char>& in_set);

/// |N_G(S)| for S given as a membership mask of size |G|.
int boundary_vertex_count(const Multigraph& g, const std::vector<char>& in_set);

/// Vertex set of the component of G[S] that contains `start` (which must be
/// in S), as a membership mask.
std::vector<char> component_within(const Multigraph& g, const std::vector<char>& in_set, Vertex start);

}  // namespace etw
