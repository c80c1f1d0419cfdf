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

#include "etw/bounds.hpp"

#include <algorithm>

#include "etw/blocks.hpp"
#include "etw/metrics.hpp"

namespace etw {

std::int64_t p_block(const Multigraph& g, const WidthOptions& options) {
  std::int64_t p = 0;
  for (const Block& b : block_decomposition(g).blocks) {
    const std::int64_t tw = width_exact(b.graph, CostKind::vc, std::nullopt, SolveMode::dp, options).value;
    p = std::max({p, tw, static_cast<std::int64_t>(graph_metrics(b.graph).max_edge_degree)});
  }
  return p;
}

RootedSolver exact_rooted_solver(const WidthOptions& options) {
  return [options](const Multigraph& block, Vertex root) {
    return width_exact(block, CostKind::ec, root, SolveMode::dp, options).witness;
  };
}

bool BoundReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const NamedVerdict& v) { return v.holds; });
}

BoundReport bound_report(const Multigraph& g, const WidthOptions& options) {
  BoundReport r;
  const auto solve = [&](CostKind kind) { return width_exact(g, kind, std::nullopt, SolveMode::dp, options); };
  r.tw_witness = solve(CostKind::vc);
  r.pw_witness = solve(CostKind::v);
  r.cw_witness = solve(CostKind::e);
  r.etw_witness = solve(CostKind::ec);
  r.tw = r.tw_witness.value;
  r.pw = r.pw_witness.value;
  r.cw = r.cw_witness.value;
  r.etw = r.etw_witness.value;
  r.p_block = p_block(g, options);
  r.max_edge_degree = graph_metrics(g).max_edge_degree;
  r.etw_tree_layout = layout_to_tree_layout(g, r.etw_witness.witness);

  const std::int64_t p = r.p_block;
  r.verdicts = {
      {"sqrt(p) <= etw", p <= r.etw * r.etw},
      {"etw <= p^4 + 2p^2", r.etw <= p * p * p * p + 2 * p * p},
      {"etw <= tw * max_edge_degree", r.etw <= r.tw * r.max_edge_degree},
      {"tw <= etw", r.tw <= r.etw},
      {"etw <= cw", r.etw <= r.cw},
      {"tw <= pw", r.tw <= r.pw},
  };
  return r;
}

StructuralVerdicts verify_structural_bounds(const Multigraph& g, const WidthOptions& options) {
  StructuralVerdicts out;
  out.etw = edge_treewidth(g, options);
  if (is_biconnected(g)) {
    const std::int64_t bound = out.etw * out.etw + 2 * out.etw;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      out.max_rooted =
          std::max(out.max_rooted, width_exact(g, CostKind::ec, u, SolveMode::dp, options).value);
    }
    out.rooted_bound = out.max_rooted <= bound;
  }
  if (g.vertex_count() > 0 && is_connected(g)) {
    for (const Block& b : block_decomposition(g).blocks) {
      const std::int64_t e = edge_treewidth(b.graph, options);
      out.block_bound_value = std::max(out.block_bound_value, e * e + 2 * e);
    }
    const TreeLayout t = block_tree_layout(g, exact_rooted_solver(options));
    out.block_layout_cost = tree_cost_profile(g, t, TreeCostKind::e).max;
    out.block_bound = out.block_layout_cost <= out.block_bound_value;
  }
  return out;
}

}  // namespace etw
