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

#include "etw/bisection.hpp"

#include <algorithm>
#include <cstdint>

#include "etw/error.hpp"

namespace etw {

EtwInstance reduce_bisection_to_etw(const BisectionInstance& inst) {
  const int n = inst.g.vertex_count();
  if (n < 2 || n % 2 != 0) {
    throw PreconditionError("reduction needs an even number of vertices (got " + std::to_string(n) + ")");
  }
  if (inst.k < 0) throw PreconditionError("k must be non-negative");
  std::vector<Edge> edges = inst.g.edges();
  const int q = n * n;
  for (int j = 0; j < q; ++j) {
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, n + j, 1});
  }
  const std::int64_t n3 = static_cast<std::int64_t>(n) * n * n;
  return {Multigraph(n + q, edges), n3 / 2 + inst.k};
}

BisectionResult min_bisection_exact(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxBisectionVertices) {
    throw LimitExceeded("min bisection: " + std::to_string(n) + " vertices exceed " +
                        std::to_string(kMaxBisectionVertices));
  }
  const int half = n / 2;
  const std::vector<Edge> edges = g.edges();
  BisectionResult best;
  bool have = false;
  // Gosper's hack walks all half-size subsets in increasing order.
  std::uint32_t s = half == 0 ? 0 : (1u << half) - 1;
  const std::uint32_t limit = 1u << n;
  while (s < limit) {
    std::int64_t cut = 0;
    for (const Edge& e : edges) {
      if (((s >> e.u) & 1u) != ((s >> e.v) & 1u)) cut += e.multiplicity;
    }
    if (!have || cut < best.value) {
      have = true;
      best.value = cut;
      best.side.clear();
      for (Vertex v = 0; v < n; ++v) {
        if ((s >> v) & 1u) best.side.push_back(v);
      }
    }
    if (s == 0) break;
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return best;
}

Layout reduction_witness_layout(const Multigraph& g, const std::vector<Vertex>& side) {
  const int n = g.vertex_count();
  std::vector<char> first(n, 0);
  for (Vertex v : side) first[v] = 1;
  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) {
    if (first[v]) order.push_back(v);
  }
  for (Vertex v = n; v < n + n * n; ++v) order.push_back(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!first[v]) order.push_back(v);
  }
  return Layout(std::move(order));
}

ReductionCheck verify_reduction(const BisectionInstance& inst, const WidthOptions& options,
                                std::optional<std::int64_t> known_etw_h) {
  const int n = inst.g.vertex_count();
  if (n != 2 && n != 4) {
    throw LimitExceeded("reduction check supports n in {2, 4} only (got " + std::to_string(n) + ")");
  }
  const EtwInstance h = reduce_bisection_to_etw(inst);
  ReductionCheck out;
  const BisectionResult bis = min_bisection_exact(inst.g);
  out.min_bisection = bis.value;
  out.w = h.w;
  out.etw_h = known_etw_h ? *known_etw_h : edge_treewidth(h.h, options);
  out.bisection_yes = bis.value <= inst.k;
  out.etw_yes = out.etw_h <= h.w;
  if (out.bisection_yes) {
    const Layout witness = reduction_witness_layout(inst.g, bis.side);
    out.witness_cost = profile_max(cost_profile(h.h, witness, CostKind::ec));
  }
  return out;
}

}  // namespace etw
