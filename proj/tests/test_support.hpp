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

// Shared helpers for the test binaries: random graph generators and slow
// reference implementations that do not touch the library's solvers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "etw/graph_io.hpp"
#include "etw/layout.hpp"
#include "etw/multigraph.hpp"

namespace etw::testing {

inline Multigraph fixture(const std::string& name) { return read_graph_file(std::string(ETW_FIXTURE_DIR) + "/" + name); }

inline std::string fixture_path(const std::string& name) { return std::string(ETW_FIXTURE_DIR) + "/" + name; }

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Each pair present with probability p, multiplicity uniform in [1, max_mult].
inline Multigraph random_multigraph(std::mt19937& rng, int n, int max_mult, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, uniform(rng, 1, max_mult)});
    }
  }
  return Multigraph(n, edges);
}

/// Random spanning tree plus extra pairs with probability p.
inline Multigraph random_connected_multigraph(std::mt19937& rng, int n, int max_mult, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int v = 1; v < n; ++v) edges.push_back({uniform(rng, 0, v - 1), v, uniform(rng, 1, max_mult)});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, uniform(rng, 1, max_mult)});
    }
  }
  // Merged pairs may exceed max_mult; clamp them back.
  Multigraph merged(n, edges);
  std::vector<Edge> clamped = merged.edges();
  for (Edge& e : clamped) e.multiplicity = std::min(e.multiplicity, max_mult);
  return Multigraph(n, clamped);
}

inline Multigraph random_tree(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({uniform(rng, 0, v - 1), v, 1});
  return Multigraph(n, edges);
}

/// Connected cactus: blocks are single edges, C2s (doubled edges) or
/// cycles, each attached at one existing vertex.
inline Multigraph random_cactus(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  int next = 1;
  while (next < n) {
    const int anchor = uniform(rng, 0, next - 1);
    const int room = n - next;
    const int kind = uniform(rng, 0, 2);
    if (kind == 0 || room < 2) {
      edges.push_back({anchor, next, kind == 1 ? 2 : 1});
      ++next;
    } else {
      const int len = uniform(rng, 2, std::min(room, 5));  // new vertices on the cycle
      int prev = anchor;
      for (int j = 0; j < len; ++j) {
        edges.push_back({prev, next, 1});
        prev = next++;
      }
      edges.push_back({prev, anchor, 1});
    }
  }
  return Multigraph(n, edges);
}

/// Hamiltonian cycle plus random chords, multiplicities up to max_mult.
inline Multigraph random_biconnected(std::mt19937& rng, int n, int max_mult, double p) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const int a = perm[i];
    const int b = perm[(i + 1) % n];
    if (n == 2 && i == 1) break;
    edges.push_back({std::min(a, b), std::max(a, b), uniform(rng, 1, max_mult)});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, 1});
    }
  }
  Multigraph merged(n, edges);
  std::vector<Edge> clamped = merged.edges();
  for (Edge& e : clamped) e.multiplicity = std::min(e.multiplicity, max_mult);
  if (n == 2) clamped[0].multiplicity = std::max(clamped[0].multiplicity, 2);
  return Multigraph(n, clamped);
}

// --- naive reference widths -------------------------------------------------

/// Cost of position i computed straight from the definitions.
inline std::int64_t naive_cost(const Multigraph& g, const std::vector<Vertex>& order, std::size_t i, CostKind kind) {
  const int n = g.vertex_count();
  std::vector<char> in_s(n, 0);
  for (std::size_t j = i; j < order.size(); ++j) in_s[order[j]] = 1;
  std::vector<char> part = in_s;
  if (kind == CostKind::vc || kind == CostKind::ec) {
    // flood fill inside S from order[i]
    std::vector<char> reach(n, 0);
    std::vector<Vertex> todo{order[i]};
    reach[order[i]] = 1;
    while (!todo.empty()) {
      const Vertex x = todo.back();
      todo.pop_back();
      for (const Edge& e : g.edges()) {
        Vertex y = -1;
        if (e.u == x) y = e.v;
        if (e.v == x) y = e.u;
        if (y >= 0 && in_s[y] && !reach[y]) {
          reach[y] = 1;
          todo.push_back(y);
        }
      }
    }
    part = reach;
  }
  if (kind == CostKind::e || kind == CostKind::ec) {
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
      if (part[e.u] != part[e.v]) total += e.multiplicity;
    }
    return total;
  }
  std::vector<char> outside_nb(n, 0);
  for (const Edge& e : g.edges()) {
    if (part[e.u] && !part[e.v]) outside_nb[e.v] = 1;
    if (part[e.v] && !part[e.u]) outside_nb[e.u] = 1;
  }
  return std::count(outside_nb.begin(), outside_nb.end(), 1);
}

inline std::int64_t naive_layout_max(const Multigraph& g, const std::vector<Vertex>& order, CostKind kind) {
  std::int64_t best = 0;
  for (std::size_t i = 1; i < order.size(); ++i) best = std::max(best, naive_cost(g, order, i, kind));
  return best;
}

/// Minimum over all n! layouts (optionally starting at `root`).
inline std::int64_t brute_force_width(const Multigraph& g, CostKind kind, std::optional<Vertex> root = std::nullopt) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    if (root && order[0] != *root) continue;
    best = std::min(best, naive_layout_max(g, order, kind));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const Multigraph& a, const Multigraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_copy_count() != b.edge_copy_count()) return false;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = a.multiplicity(u, v) == b.multiplicity(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Relabels g by the permutation p (vertex v becomes p[v]).
inline Multigraph permuted(const Multigraph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({p[e.u], p[e.v], e.multiplicity});
  return Multigraph(g.vertex_count(), edges);
}

}  // namespace etw::testing
