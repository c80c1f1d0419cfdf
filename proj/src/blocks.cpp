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

#include "etw/blocks.hpp"

#include <algorithm>
#include <utility>

namespace etw {
namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const Multigraph& g)
      : g_(g), disc_(g.vertex_count(), -1), low_(g.vertex_count(), 0) {}

  std::vector<std::vector<std::pair<Vertex, Vertex>>> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (disc_[s] == -1) visit(s, -1);
    }
    return std::move(blocks_);
  }

 private:
  void visit(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = clock_++;
    for (const Neighbor& nb : g_.neighbors(u)) {
      const Vertex w = nb.vertex;
      if (w == parent) {
        // Parallel copies of the tree edge close a 2-cycle.
        if (nb.multiplicity >= 2) low_[u] = std::min(low_[u], disc_[w]);
        continue;
      }
      if (disc_[w] == -1) {
        stack_.emplace_back(u, w);
        visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) {
          std::vector<std::pair<Vertex, Vertex>> block;
          while (true) {
            const auto top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
            if (top == std::pair<Vertex, Vertex>(u, w)) break;
          }
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[u]) {
        stack_.emplace_back(u, w);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  const Multigraph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  int clock_ = 0;
  std::vector<std::pair<Vertex, Vertex>> stack_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> blocks_;
};

}  // namespace

BlockDecomposition block_decomposition(const Multigraph& g) {
  BlockDecomposition out;
  for (const auto& pairs : BlockFinder(g).run()) {
    std::vector<Vertex> vertices;
    for (const auto& [a, b] : pairs) {
      vertices.push_back(a);
      vertices.push_back(b);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Block block;
    block.graph = induced_subgraph(g, vertices);
    block.vertices = std::move(vertices);
    block.is_bridge = block.graph.edge_copy_count() == 1;
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  std::vector<int> membership(g.vertex_count(), 0);
  for (const Block& b : out.blocks) {
    for (Vertex v : b.vertices) ++membership[v];
  }
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (membership[v] >= 2) cuts.push_back(v);
  }
  out.cut_vertices = VertexSubset(cuts);

  BlockTree& tree = out.tree;
  tree.block_count = static_cast<int>(out.blocks.size());
  tree.cut_vertex = cuts;
  tree.adjacency.resize(out.blocks.size() + cuts.size());
  for (int bi = 0; bi < tree.block_count; ++bi) {
    for (Vertex v : out.blocks[bi].vertices) {
      const auto it = std::lower_bound(cuts.begin(), cuts.end(), v);
      if (it == cuts.end() || *it != v) continue;
      const int node = tree.block_count + static_cast<int>(it - cuts.begin());
      tree.adjacency[bi].push_back(node);
      tree.adjacency[node].push_back(bi);
    }
  }
  return out;
}

bool is_biconnected(const Multigraph& g) {
  if (g.edge_copy_count() == 0 || !is_connected(g)) return false;
  return block_decomposition(g).blocks.size() == 1;
}

}  // namespace etw
