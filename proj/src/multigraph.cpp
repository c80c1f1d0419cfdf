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

#include "etw/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "etw/error.hpp"

namespace etw {

Multigraph::Multigraph(int vertex_count) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Multigraph::Multigraph(int vertex_count, std::span<const Edge> edges) : Multigraph(vertex_count) {
  std::map<std::pair<Vertex, Vertex>, std::int64_t> pairs;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
    }
    if (e.u == e.v) throw PreconditionError("loop edge at vertex " + std::to_string(e.u));
    if (e.multiplicity <= 0) throw PreconditionError("non-positive multiplicity");
    pairs[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.multiplicity;
  }
  for (const auto& [key, mult] : pairs) {
    if (mult > 1'000'000'000) throw PreconditionError("multiplicity overflow");
    const int m = static_cast<int>(mult);
    adjacency_[static_cast<std::size_t>(key.first)].push_back({key.second, m});
    adjacency_[static_cast<std::size_t>(key.second)].push_back({key.first, m});
    ++pair_count_;
    copy_count_ += m;
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  const auto it = std::lower_bound(list.begin(), list.end(), v,
                                   [](const Neighbor& n, Vertex x) { return n.vertex < x; });
  return (it != list.end() && it->vertex == v) ? it->multiplicity : 0;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(pair_count_));
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      if (u < nb.vertex) out.push_back({u, nb.vertex, nb.multiplicity});
    }
  }
  return out;
}

int Multigraph::edge_degree(Vertex v) const {
  int total = 0;
  for (const Neighbor& nb : neighbors(v)) total += nb.multiplicity;
  return total;
}

VertexSubset::VertexSubset(std::initializer_list<Vertex> members)
    : VertexSubset(std::vector<Vertex>(members)) {}

VertexSubset::VertexSubset(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains_vertex(keep[i])) throw PreconditionError("induced_subgraph: vertex out of range");
    if (index[static_cast<std::size_t>(keep[i])] != -1) {
      throw PreconditionError("induced_subgraph: repeated vertex");
    }
    index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.multiplicity});
  }
  return Multigraph(static_cast<int>(keep.size()), edges);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift, e.multiplicity});
  return Multigraph(a.vertex_count() + b.vertex_count(), edges);
}

Multigraph scale_multiplicities(const Multigraph& g, int factor) {
  if (factor < 1) throw PreconditionError("scale factor must be positive");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.multiplicity *= factor;
  return Multigraph(g.vertex_count(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> comp{s};
    label[static_cast<std::size_t>(s)] = id;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const Neighbor& nb : g.neighbors(comp[head])) {
        if (label[static_cast<std::size_t>(nb.vertex)] == -1) {
          label[static_cast<std::size_t>(nb.vertex)] = id;
          comp.push_back(nb.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() <= 1; }

}  // namespace etw
