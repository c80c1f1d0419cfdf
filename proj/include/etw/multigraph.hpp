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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace etw {

using Vertex = int;

/// One vertex pair of a multigraph together with how many parallel copies
/// join it. Normalized edges have u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  int multiplicity = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Loop-free undirected graph with edge multiplicities on vertices 0..n-1.
///
/// Values are immutable once built; every rewrite produces a new graph.
/// Construction merges repeated pairs (multiplicities add up) and rejects
/// loops, out-of-range endpoints and non-positive multiplicities with
/// PreconditionError.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, std::span<const Edge> edges);
  Multigraph(int vertex_count, std::initializer_list<Edge> edges)
      : Multigraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  /// Number of distinct adjacent pairs.
  int pair_count() const { return pair_count_; }
  /// Number of edge copies, i.e. |E(G)| counted with multiplicity.
  std::int64_t edge_copy_count() const { return copy_count_; }

  int multiplicity(Vertex u, Vertex v) const;
  /// Neighbours of `v` in increasing vertex order.
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  /// All pairs, sorted by (u, v), u < v.
  std::vector<Edge> edges() const;

  int vertex_degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int edge_degree(Vertex v) const;

  bool contains_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  int pair_count_ = 0;
  std::int64_t copy_count_ = 0;
};

/// Sorted set of vertex identifiers.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(std::initializer_list<Vertex> members);
  explicit VertexSubset(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Vertex> members_;
};

/// G[keep], renumbered densely in the order of `keep` (which must be
/// duplicate-free and in range).
Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> keep);

/// Disjoint union; vertices of `b` are shifted by |a|.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Same vertex set, every multiplicity multiplied by `factor` (>= 1).
Multigraph scale_multiplicities(const Multigraph& g, int factor);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);

bool is_connected(const Multigraph& g);

}  // namespace etw
