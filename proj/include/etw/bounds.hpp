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
#include <string>
#include <vector>

#include "etw/multigraph.hpp"
#include "etw/tree_layout.hpp"
#include "etw/width.hpp"

namespace etw {

/// Max over blocks B of max(tw(B), max edge-degree of B); 0 without edges.
std::int64_t p_block(const Multigraph& g, const WidthOptions& options = {});

/// Rooted solver backed by width_exact(block, ec, root).
RootedSolver exact_rooted_solver(const WidthOptions& options = {});

struct NamedVerdict {
  std::string name;
  bool holds = false;
};

struct BoundReport {
  std::int64_t tw = 0;
  std::int64_t pw = 0;
  std::int64_t cw = 0;
  std::int64_t etw = 0;
  std::int64_t p_block = 0;
  std::int64_t max_edge_degree = 0;
  WidthCertificate tw_witness;
  WidthCertificate pw_witness;
  WidthCertificate cw_witness;
  WidthCertificate etw_witness;
  /// Built from etw_witness; its max λe equals etw.
  TreeLayout etw_tree_layout;
  /// In order: sqrt(p) <= etw, etw <= p^4 + 2p^2, etw <= tw * Δe,
  /// tw <= etw, etw <= cw, tw <= pw.
  std::vector<NamedVerdict> verdicts;

  bool all_hold() const;
};

BoundReport bound_report(const Multigraph& g, const WidthOptions& options = {});

struct StructuralVerdicts {
  std::int64_t etw = 0;
  /// Rooted bound, checked only for biconnected graphs: every rooted
  /// optimum is at most etw^2 + 2 etw.
  std::optional<bool> rooted_bound;
  std::int64_t max_rooted = 0;
  /// Block bound, checked only for connected graphs: the block tree-layout
  /// costs at most the max over blocks of etw(B)^2 + 2 etw(B).
  std::optional<bool> block_bound;
  std::int64_t block_layout_cost = 0;
  std::int64_t block_bound_value = 0;
};

StructuralVerdicts verify_structural_bounds(const Multigraph& g, const WidthOptions& options = {});

}  // namespace etw
