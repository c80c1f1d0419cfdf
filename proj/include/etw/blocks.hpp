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

#include <vector>

#include "etw/multigraph.hpp"

namespace etw {

/// A bridge (one copy of a pair of multiplicity one) or a maximal
/// 2-connected subgraph. A pair of multiplicity >= 2 on its own is a
/// 2-connected block (the cycle C2), never a bridge.
struct Block {
  Multigraph graph;
  /// vertices[i] is the parent-graph vertex of block vertex i (ascending).
  std::vector<Vertex> vertices;
  bool is_bridge = false;
};

/// Bipartite tree over block nodes 0..blocks-1 followed by one node per cut
/// vertex, adjacent when the cut vertex belongs to the block.
struct BlockTree {
  int block_count = 0;
  std::vector<Vertex> cut_vertex;  ///< parent-graph vertex of node block_count + i
  std::vector<std::vector<int>> adjacency;

  int node_count() const { return static_cast<int>(adjacency.size()); }
  bool is_block_node(int node) const { return node < block_count; }
};

struct BlockDecomposition {
  /// Ordered lexicographically by vertex list.
  std::vector<Block> blocks;
  VertexSubset cut_vertices;
  BlockTree tree;
};

BlockDecomposition block_decomposition(const Multigraph& g);

/// True when g is connected, has at least one edge copy, and has a single
/// block.
bool is_biconnected(const Multigraph& g);

}  // namespace etw
