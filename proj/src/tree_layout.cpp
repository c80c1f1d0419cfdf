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

#include "etw/tree_layout.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <map>
#include <optional>
#include <sstream>

#include "etw/blocks.hpp"
#include "etw/error.hpp"
#include "etw/metrics.hpp"

namespace etw {

TreeLayout::TreeLayout(int root, std::vector<int> parent, std::vector<int> placement)
    : root_(root), parent_(std::move(parent)), placement_(std::move(placement)) {
  const int k = node_count();
  if (k == 0 || root_ < 0 || root_ >= k) throw PreconditionError("tree-layout: root out of range");
  if (parent_[root_] != -1) throw PreconditionError("tree-layout: root has a parent");
  children_.resize(k);
  for (int u = 0; u < k; ++u) {
    if (u == root_) continue;
    if (parent_[u] < 0 || parent_[u] >= k) throw PreconditionError("tree-layout: node without valid parent");
    children_[parent_[u]].push_back(u);
  }
  depth_.assign(k, -1);
  depth_[root_] = 0;
  std::vector<int> stack{root_};
  int reached = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : children_[u]) {
      depth_[c] = depth_[u] + 1;
      stack.push_back(c);
    }
  }
  if (reached != k) throw PreconditionError("tree-layout: parent links contain a cycle");
  occupant_.assign(k, -1);
  for (std::size_t v = 0; v < placement_.size(); ++v) {
    const int node = placement_[v];
    if (node < 0 || node >= k) throw PreconditionError("tree-layout: vertex placed on a missing node");
    if (occupant_[node] == -1) occupant_[node] = static_cast<Vertex>(v);
  }
}

bool TreeLayout::is_ancestor(int ancestor, int node) const {
  while (depth_[node] > depth_[ancestor]) node = parent_[node];
  return node == ancestor;
}

TreeLayoutVerdict validate_tree_layout(const Multigraph& g, const TreeLayout& t) {
  TreeLayoutVerdict verdict;
  if (t.vertex_count() != g.vertex_count()) {
    verdict.valid = false;
    verdict.problems.push_back("placement covers " + std::to_string(t.vertex_count()) + " vertices, graph has " +
                               std::to_string(g.vertex_count()));
    return verdict;
  }
  std::vector<int> load(t.node_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (++load[t.node_of(v)] == 2) {
      verdict.valid = false;
      verdict.problems.push_back("node " + std::to_string(t.node_of(v)) + " holds several vertices");
    }
  }
  for (const Edge& e : g.edges()) {
    const int a = t.node_of(e.u);
    const int b = t.node_of(e.v);
    if (!t.is_ancestor(a, b) && !t.is_ancestor(b, a)) {
      verdict.valid = false;
      verdict.violations.push_back(e);
    }
  }
  return verdict;
}

TreeCostProfile tree_cost_profile(const Multigraph& g, const TreeLayout& t, TreeCostKind kind) {
  if (!validate_tree_layout(g, t).valid) throw PreconditionError("invalid tree-layout");
  TreeCostProfile out;
  out.node_cost.assign(t.node_count(), 0);
  std::vector<char> in_subtree(g.vertex_count(), 0);
  for (int u = 0; u < t.node_count(); ++u) {
    std::fill(in_subtree.begin(), in_subtree.end(), 0);
    std::vector<int> stack{u};
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      if (t.vertex_at(w) != -1) in_subtree[t.vertex_at(w)] = 1;
      for (int c : t.children(w)) stack.push_back(c);
    }
    out.node_cost[u] = kind == TreeCostKind::e ? boundary_edge_count(g, in_subtree)
                                               : boundary_vertex_count(g, in_subtree);
    out.max = std::max(out.max, out.node_cost[u]);
  }
  return out;
}

TreeLayout layout_to_tree_layout(const Multigraph& g, const Layout& layout) {
  if (!layout.is_layout_of(g)) throw PreconditionError("not a layout of the graph");
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[layout[i]] = i;

  std::vector<int> parent{-1};
  std::vector<int> placement(n, -1);
  struct Task {
    std::vector<Vertex> members;
    int parent_node;
  };
  std::vector<Task> work;
  {
    std::vector<Vertex> all = layout.order();
    work.push_back({std::move(all), 0});
  }
  std::vector<char> in_set(n, 0);
  while (!work.empty()) {
    Task task = std::move(work.back());
    work.pop_back();
    for (Vertex v : task.members) in_set[v] = 1;
    // Components of G[members], each listed in layout order.
    std::vector<std::vector<Vertex>> components;
    for (Vertex v : task.members) {
      if (!in_set[v]) continue;
      const auto comp = component_within(g, in_set, v);
      std::vector<Vertex> list;
      for (Vertex w : task.members) {
        if (comp[w]) {
          list.push_back(w);
          in_set[w] = 0;
        }
      }
      components.push_back(std::move(list));
    }
    // Children in layout order of their heads; tasks are pushed in reverse
    // so that node numbering follows the same order.
    std::vector<Task> spawned;
    for (auto& comp : components) {
      const Vertex head = comp.front();
      const int node = static_cast<int>(parent.size());
      parent.push_back(task.parent_node);
      placement[head] = node;
      comp.erase(comp.begin());
      if (!comp.empty()) spawned.push_back({std::move(comp), node});
    }
    for (auto it = spawned.rbegin(); it != spawned.rend(); ++it) work.push_back(std::move(*it));
  }
  return TreeLayout(0, std::move(parent), std::move(placement));
}

Layout tree_layout_to_layout(const Multigraph& g, const TreeLayout& t) {
  if (!validate_tree_layout(g, t).valid) throw PreconditionError("invalid tree-layout");
  const int k = t.node_count();
  // Smallest vertex in each subtree, children before parents.
  std::vector<int> order_by_depth(k);
  for (int u = 0; u < k; ++u) order_by_depth[u] = u;
  std::sort(order_by_depth.begin(), order_by_depth.end(),
            [&](int a, int b) { return t.depth(a) > t.depth(b); });
  std::vector<int> key(k, INT_MAX);
  for (int u : order_by_depth) {
    if (t.vertex_at(u) != -1) key[u] = std::min(key[u], t.vertex_at(u));
    if (t.parent(u) != -1) key[t.parent(u)] = std::min(key[t.parent(u)], key[u]);
  }
  std::vector<Vertex> order;
  std::vector<int> stack{t.root()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (t.vertex_at(u) != -1) order.push_back(t.vertex_at(u));
    std::vector<int> kids = t.children(u);
    std::sort(kids.begin(), kids.end(), [&](int a, int b) { return std::pair(key[a], a) < std::pair(key[b], b); });
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return Layout(std::move(order));
}

namespace {

bool is_cycle_block(const Multigraph& b) {
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    if (b.edge_degree(v) != 2) return false;
  }
  return b.vertex_count() >= 2;
}

Layout walk_cycle(const Multigraph& b, Vertex root) {
  std::vector<Vertex> order{root};
  std::vector<char> seen(b.vertex_count(), 0);
  seen[root] = 1;
  Vertex current = root;
  while (static_cast<int>(order.size()) < b.vertex_count()) {
    for (const Neighbor& nb : b.neighbors(current)) {
      if (!seen[nb.vertex]) {
        current = nb.vertex;
        break;
      }
    }
    seen[current] = 1;
    order.push_back(current);
  }
  return Layout(std::move(order));
}

}  // namespace

TreeLayout block_tree_layout(const Multigraph& g, const RootedSolver& solver) {
  if (g.vertex_count() == 0) throw PreconditionError("block_tree_layout: empty graph");
  if (!is_connected(g)) throw PreconditionError("block_tree_layout: graph is disconnected");
  if (g.vertex_count() == 1) return TreeLayout(0, {-1}, {0});

  const BlockDecomposition bd = block_decomposition(g);
  const BlockTree& bt = bd.tree;
  int root_block = 0;
  while (bt.adjacency[root_block].size() > 1) ++root_block;

  std::vector<int> parent{-1};
  std::vector<int> placement(g.vertex_count(), -1);
  placement[bd.blocks[root_block].vertices.front()] = 0;

  std::vector<char> block_done(bt.block_count, 0);
  // (block, entry vertex in the parent graph)
  std::vector<std::pair<int, Vertex>> queue{{root_block, bd.blocks[root_block].vertices.front()}};
  block_done[root_block] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [bi, entry] = queue[head];
    const Block& block = bd.blocks[bi];
    const auto local_root = static_cast<Vertex>(
        std::lower_bound(block.vertices.begin(), block.vertices.end(), entry) - block.vertices.begin());

    Layout rooted;
    if (block.is_bridge) {
      rooted = Layout(std::vector<Vertex>{local_root, 1 - local_root});
    } else if (is_cycle_block(block.graph)) {
      rooted = walk_cycle(block.graph, local_root);
    } else {
      rooted = solver(block.graph, local_root);
    }
    if (!rooted.is_layout_of(block.graph) || rooted[0] != local_root) {
      throw InvariantError("rooted solver returned an unusable layout");
    }

    // The local tree has an unplaced root whose only child holds the entry
    // vertex; that child is identified with the entry's existing node.
    const TreeLayout local = layout_to_tree_layout(block.graph, rooted);
    std::vector<int> global_of(local.node_count(), -1);
    global_of[local.node_of(local_root)] = placement[entry];
    std::vector<int> stack{local.node_of(local_root)};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int c : local.children(u)) {
        global_of[c] = static_cast<int>(parent.size());
        parent.push_back(global_of[u]);
        stack.push_back(c);
      }
    }
    for (Vertex lv = 0; lv < block.graph.vertex_count(); ++lv) {
      placement[block.vertices[lv]] = global_of[local.node_of(lv)];
    }

    for (int cut_node : bt.adjacency[bi]) {
      const Vertex cut = bt.cut_vertex[cut_node - bt.block_count];
      for (int child : bt.adjacency[cut_node]) {
        if (block_done[child]) continue;
        block_done[child] = 1;
        queue.emplace_back(child, cut);
      }
    }
  }
  return TreeLayout(0, std::move(parent), std::move(placement));
}

std::string serialize_tree_layout(const TreeLayout& t) {
  std::ostringstream out;
  out << "r " << t.root() << '\n';
  for (int u = 0; u < t.node_count(); ++u) {
    if (u != t.root()) out << "p " << u << ' ' << t.parent(u) << '\n';
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) out << "m " << v << ' ' << t.node_of(v) << '\n';
  return out.str();
}

TreeLayout parse_tree_layout(std::string_view text) {
  std::optional<int> root;
  std::map<int, int> parents;
  std::map<int, int> placement;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto parse_int = [&](const std::string& token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError(line_no, "malformed number '" + token + "'");
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty() || parts[0][0] == '#') continue;
    if (parts[0] == "r" && parts.size() == 2) {
      if (root) throw ParseError(line_no, "duplicate root line");
      root = parse_int(parts[1]);
    } else if (parts[0] == "p" && parts.size() == 3) {
      if (!parents.emplace(parse_int(parts[1]), parse_int(parts[2])).second) {
        throw ParseError(line_no, "node has two parents");
      }
    } else if (parts[0] == "m" && parts.size() == 3) {
      if (!placement.emplace(parse_int(parts[1]), parse_int(parts[2])).second) {
        throw ParseError(line_no, "vertex placed twice");
      }
    } else {
      throw ParseError(line_no, "malformed line");
    }
  }
  if (!root) throw ParseError(line_no, "missing root line");
  int node_count = *root + 1;
  for (const auto& [u, p] : parents) node_count = std::max({node_count, u + 1, p + 1});
  for (const auto& [v, u] : placement) node_count = std::max(node_count, u + 1);
  std::vector<int> parent(node_count, -2);
  parent[*root] = -1;
  for (const auto& [u, p] : parents) {
    if (u == *root) throw ParseError(line_no, "root has a parent");
    parent[u] = p;
  }
  for (int u = 0; u < node_count; ++u) {
    if (parent[u] == -2) throw ParseError(line_no, "node " + std::to_string(u) + " has no parent");
  }
  std::vector<int> placed(placement.size(), -1);
  for (const auto& [v, u] : placement) {
    if (v >= static_cast<int>(placed.size())) throw ParseError(line_no, "vertex ids must be dense");
    placed[v] = u;
  }
  try {
    return TreeLayout(*root, std::move(parent), std::move(placed));
  } catch (const PreconditionError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace etw
