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

#include "etw/metrics.hpp"

#include <algorithm>
#include <queue>

#include "etw/error.hpp"

namespace etw {

std::optional<int> GraphMetrics::diameter() const {
  if (component_diameter.empty()) return std::nullopt;
  return *std::max_element(component_diameter.begin(), component_diameter.end());
}

GraphMetrics graph_metrics(const Multigraph& g) {
  const int n = g.vertex_count();
  GraphMetrics m;
  m.vertex_degree.resize(n);
  m.edge_degree.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    m.vertex_degree[v] = g.vertex_degree(v);
    m.edge_degree[v] = g.edge_degree(v);
    m.max_vertex_degree = std::max(m.max_vertex_degree, m.vertex_degree[v]);
    m.max_edge_degree = std::max(m.max_edge_degree, m.edge_degree[v]);
  }
  std::vector<int> dist(n, -1);
  for (const auto& comp : connected_components(g)) {
    int diameter = 0;
    for (Vertex s : comp) {
      for (Vertex v : comp) dist[v] = -1;
      std::queue<Vertex> queue;
      queue.push(s);
      dist[s] = 0;
      while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop();
        diameter = std::max(diameter, dist[u]);
        for (const Neighbor& nb : g.neighbors(u)) {
          if (dist[nb.vertex] == -1) {
            dist[nb.vertex] = dist[u] + 1;
            queue.push(nb.vertex);
          }
        }
      }
    }
    m.component_diameter.push_back(diameter);
  }
  return m;
}

std::vector<char> component_within(const Multigraph& g, const std::vector<char>& in_set, Vertex start) {
  std::vector<char> comp(in_set.size(), 0);
  std::vector<Vertex> stack{start};
  comp[start] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (in_set[nb.vertex] && !comp[nb.vertex]) {
        comp[nb.vertex] = 1;
        stack.push_back(nb.vertex);
      }
    }
  }
  return comp;
}

std::int64_t boundary_edge_count(const Multigraph& g, const std::vector<char>& in_set) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!in_set[u]) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (!in_set[nb.vertex]) total += nb.multiplicity;
    }
  }
  return total;
}

int boundary_vertex_count(const Multigraph& g, const std::vector<char>& in_set) {
  std::vector<char> seen(in_set.size(), 0);
  int total = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (!in_set[u]) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (!in_set[nb.vertex] && !seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++total;
      }
    }
  }
  return total;
}

CutQuantities cut_quantities(const Multigraph& g, const VertexSubset& s, Vertex v) {
  for (Vertex x : s) {
    if (!g.contains_vertex(x)) throw PreconditionError("subset vertex out of range");
  }
  if (!s.contains(v)) throw PreconditionError("cut_quantities: v is not in S");
  std::vector<char> in_set(g.vertex_count(), 0);
  for (Vertex x : s) in_set[x] = 1;

  CutQuantities out;
  std::vector<Vertex> outside;
  for (Vertex x : s) {
    for (const Neighbor& nb : g.neighbors(x)) {
      if (in_set[nb.vertex]) continue;
      outside.push_back(nb.vertex);
      out.boundary_edges.push_back({std::min(x, nb.vertex), std::max(x, nb.vertex), nb.multiplicity});
      out.boundary_size += nb.multiplicity;
    }
  }
  std::sort(out.boundary_edges.begin(), out.boundary_edges.end());
  out.neighborhood = VertexSubset(std::move(outside));

  const auto comp = component_within(g, in_set, v);
  std::vector<Vertex> members;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (comp[x]) members.push_back(x);
  }
  out.component = VertexSubset(std::move(members));
  return out;
}

}  // namespace etw
