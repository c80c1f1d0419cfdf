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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "etw/layout.hpp"
#include "etw/multigraph.hpp"

namespace etw {

enum class SolveMode { dp, branch_and_bound, greedy_upper };

std::optional<SolveMode> solve_mode_from_string(std::string_view name);

/// Hard ceiling on exact solving, independent of the configured limit.
inline constexpr int kMaxExactVertices = 30;

struct WidthOptions {
  /// Exact modes refuse graphs with more vertices (LimitExceeded).
  int exact_limit = 22;
  /// Worker threads for the subset DP; 0 picks the hardware concurrency.
  /// Results never depend on this value.
  int threads = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// A width value together with a layout attaining it.
struct WidthCertificate {
  std::int64_t value = 0;
  Layout witness;
  CostKind kind = CostKind::ec;
  std::optional<Vertex> rooted_at;
};

/// min over layouts (starting at `root` when given) of the max cost.
///
/// `dp` runs a subset dynamic program over suffix sets: with g(∅) = 0,
///     g(S) = min over x in S of max(cost(S, x), g(S \ {x})),
/// which is sound because each position's cost depends only on its suffix
/// set and the vertex placed first in it. `branch_and_bound` searches
/// prefixes seeded by the greedy bound. `greedy_upper` returns the greedy
/// layout, an upper bound only. Ties are always broken towards the lowest
/// vertex id, so results are deterministic.
WidthCertificate width_exact(const Multigraph& g, CostKind kind, std::optional<Vertex> root = std::nullopt,
                             SolveMode mode = SolveMode::dp, const WidthOptions& options = {});

/// Exact edge-treewidth value (dp mode).
std::int64_t edge_treewidth(const Multigraph& g, const WidthOptions& options = {});

/// Lower bound on edge-treewidth: the largest minimum edge-degree over all
/// induced subgraphs (in any layout, the last vertex of a subgraph H has
/// all its H-edges on the boundary of its component).
std::int64_t etw_degeneracy_lower_bound(const Multigraph& g);

/// Re-evaluates the witness; throws InvariantError on any mismatch.
void check_certificate(const Multigraph& g, const WidthCertificate& cert);

}  // namespace etw
