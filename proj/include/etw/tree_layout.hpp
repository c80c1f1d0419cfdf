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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "etw/layout.hpp"
#include "etw/multigraph.hpp"

namespace etw {

/// Rooted tree on nodes 0..k-1 plus an injective placement of graph
/// vertices onto nodes. Nodes may stay unplaced.
///
/// The constructor only checks the tree shape (one root, every node reaches
/// it); whether the placement fits a particular graph is the business of
/// validate_tree_layout().
class TreeLayout {
 public:
  TreeLayout() = default;
  /// `parent[root]` must be -1. `placement[v]` is the node of vertex v.
  TreeLayout(int root, std::vector<int> parent, std::vector<int> placement);

  int node_count() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int node) const { return parent_[node]; }
  const std::vector<int>& children(int node) const { return children_[node]; }
  const std::vector<int>& placement() const { return placement_; }
  int node_of(Vertex v) const { return placement_[v]; }
  /// Vertex placed at `node`, or -1.
  Vertex vertex_at(int node) const { return occupant_[node]; }
  int vertex_count() const { return static_cast<int>(placement_.size()); }

  bool is_ancestor(int ancestor, int node) const;
  int depth(int node) const { return depth_[node]; }

  friend bool operator==(const TreeLayout& a, const TreeLayout& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_ && a.placement_ == b.placement_;
  }

 private:
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<int> placement_;
  std::vector<std::vector<int>> children_;
  std::vector<Vertex> occupant_;
  std::vector<int> depth_;
};

struct TreeLayoutVerdict {
  bool valid = true;
  /// Edges whose endpoints sit on incomparable nodes.
  std::vector<Edge> violations;
  /// Placement problems (wrong size, out-of-range node, shared node).
  std::vector<std::string> problems;
};

TreeLayoutVerdict validate_tree_layout(const Multigraph& g, const TreeLayout& t);

enum class TreeCostKind { v, e };

struct TreeCostProfile {
  std::vector<std::int64_t> node_cost;  ///< indexed by node
  std::int64_t max = 0;
};

/// λ(u) = |N(X(u))| (kind v) or |E(X(u))| (kind e), where X(u) is the set
/// of vertices placed in the subtree of u. Throws PreconditionError on an
/// invalid tree-layout.
TreeCostProfile tree_cost_profile(const Multigraph& g, const TreeLayout& t, TreeCostKind kind);

/// Builds a tree-layout from a layout: an unplaced root gets one child per
/// connected component, holding that component's earliest vertex, and the
/// rest of the component is treated recursively below it. The maximum λe of
/// the result never exceeds the maximum ec cost of the layout.
TreeLayout layout_to_tree_layout(const Multigraph& g, const Layout& layout);

/// Depth-first discovery order of the placed nodes; children are visited by
/// ascending smallest vertex in their subtree. The ec cost of the result
/// never exceeds the maximum λe of the tree-layout.
Layout tree_layout_to_layout(const Multigraph& g, const TreeLayout& t);

/// Returns a layout of `block` whose first vertex is `root`.
using RootedSolver = std::function<Layout(const Multigraph& block, Vertex root)>;

/// Tree-layout assembled along the block tree. The root block is the first
/// leaf block and its smallest vertex becomes the tree root; every other
/// block hangs below the node of the cut vertex through which it is entered.
/// Bridges and cycles use their obvious rooted layouts (cost <= 2); other
/// blocks use `solver`. Each block's rooted layout is expanded with
/// layout_to_tree_layout() before grafting, so max λe is bounded by the
/// largest ec cost among the block layouts. Throws PreconditionError for
/// disconnected graphs.
TreeLayout block_tree_layout(const Multigraph& g, const RootedSolver& solver);

/// Text form: "r <node>", then "p <node> <parent>" per non-root node and
/// "m <vertex> <node>" per vertex.
std::string serialize_tree_layout(const TreeLayout& t);
TreeLayout parse_tree_layout(std::string_view text);

}  // namespace etw
