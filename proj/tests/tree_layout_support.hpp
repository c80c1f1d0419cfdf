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

#include <algorithm>
#include <random>
#include <vector>

#include "etw/tree_layout.hpp"

namespace etw::testing {

/// A random valid tree-layout: an unplaced root, then vertices in random
/// order, each hung below a random node that lies under all of its earlier
/// neighbours. Falls back to a chain when no such node exists.
inline TreeLayout random_tree_layout(const Multigraph& g, std::mt19937& rng) {
  const int n = g.vertex_count();
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> parent{-1};
  std::vector<int> placement(n, -1);
  const auto is_ancestor_or_self = [&](int a, int node) {
    for (int x = node; x != -1; x = parent[x]) {
      if (x == a) return true;
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    const Vertex x = order[i];
    std::vector<int> candidates;
    for (int node = 0; node < static_cast<int>(parent.size()); ++node) {
      bool ok = true;
      for (const Neighbor& nb : g.neighbors(x)) {
        if (placement[nb.vertex] >= 0 && !is_ancestor_or_self(placement[nb.vertex], node)) ok = false;
      }
      if (ok) candidates.push_back(node);
    }
    if (candidates.empty()) {
      // earlier neighbours sit on different branches; use a chain instead
      parent.assign(1, -1);
      std::fill(placement.begin(), placement.end(), -1);
      for (int j = 0; j < n; ++j) {
        placement[order[j]] = static_cast<int>(parent.size());
        parent.push_back(static_cast<int>(parent.size()) - 1);
      }
      return TreeLayout(0, parent, placement);
    }
    const int chosen = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    placement[x] = static_cast<int>(parent.size());
    parent.push_back(chosen);
  }
  return TreeLayout(0, parent, placement);
}

}  // namespace etw::testing
