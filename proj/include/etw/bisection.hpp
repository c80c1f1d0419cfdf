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

#include "etw/layout.hpp"
#include "etw/multigraph.hpp"
#include "etw/width.hpp"

namespace etw {

/// Is there a split of V(G) into parts of sizes differing by at most one
/// with at most k edge copies between them?
struct BisectionInstance {
  Multigraph g;
  std::int64_t k = 0;
};

/// Is etw(H) <= w?
struct EtwInstance {
  Multigraph h;
  std::int64_t w = 0;
};

/// H is G plus n^2 new vertices (ids n .. n + n^2 - 1), independent of each
/// other and adjacent to every vertex of G; w = n^3 / 2 + k. Requires even
/// n >= 2 (PreconditionError otherwise).
EtwInstance reduce_bisection_to_etw(const BisectionInstance& inst);

struct BisectionResult {
  std::int64_t value = 0;
  /// The part of size floor(n/2); the first minimal one in subset order.
  std::vector<Vertex> side;
};

inline constexpr int kMaxBisectionVertices = 20;

/// Exhaustive over all floor(n/2)-subsets; LimitExceeded above 20 vertices.
BisectionResult min_bisection_exact(const Multigraph& g);

/// The layout side . Q . rest, each part ascending.
Layout reduction_witness_layout(const Multigraph& g, const std::vector<Vertex>& side);

struct ReductionCheck {
  std::int64_t min_bisection = 0;
  std::int64_t etw_h = 0;
  std::int64_t w = 0;
  bool bisection_yes = false;
  bool etw_yes = false;
  /// Max ec cost of the witness layout, evaluated when bisection_yes.
  std::optional<std::int64_t> witness_cost;

  bool agree() const { return bisection_yes == etw_yes; }
  bool witness_ok() const { return !witness_cost || *witness_cost <= w; }
};

/// Solves both sides exactly. Only n in {2, 4} is supported (LimitExceeded
/// otherwise). `known_etw_h` skips the DP when etw(H) is already known; H
/// does not depend on k.
ReductionCheck verify_reduction(const BisectionInstance& inst, const WidthOptions& options = {},
                                std::optional<std::int64_t> known_etw_h = std::nullopt);

}  // namespace etw
