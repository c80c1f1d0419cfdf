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

#include "etw/families.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etw/error.hpp"
#include "etw/rewrite.hpp"

namespace etw {
namespace {

constexpr std::array kFamilies = {
    FamilyId::cycle,     FamilyId::path,     FamilyId::star,    FamilyId::binary_tree,
    FamilyId::grid,      FamilyId::wall,     FamilyId::dot_wall, FamilyId::theta,
    FamilyId::dot_theta, FamilyId::fan,      FamilyId::tilde_fan, FamilyId::dot_fan,
    FamilyId::z2,        FamilyId::z3,       FamilyId::gtight,  FamilyId::theta_bouquet,
};

Multigraph cycle(int n, int mult) {
  std::vector<Edge> e;
  for (int j = 0; j < n; ++j) e.push_back({j, (j + 1) % n, mult});
  return Multigraph(n, e);
}

Multigraph path(int n) {
  std::vector<Edge> e;
  for (int j = 0; j + 1 < n; ++j) e.push_back({j, j + 1, 1});
  return Multigraph(n, e);
}

Multigraph grid(int rows, int cols) {
  std::vector<Edge> e;
  const auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1), 1});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c), 1});
    }
  }
  return Multigraph(rows * cols, e);
}

// (2r x r)-grid on (x, y) in [1,2r] x [1,r]; vertical edges (x,y)-(x,y+1)
// with odd x + y removed, then degree-one vertices pruned until none is left.
Multigraph wall(int r) {
  const int width = 2 * r;
  const auto id = [width](int x, int y) { return (y - 1) * width + (x - 1); };
  std::vector<Edge> e;
  for (int y = 1; y <= r; ++y) {
    for (int x = 1; x <= width; ++x) {
      if (x < width) e.push_back({id(x, y), id(x + 1, y), 1});
      if (y < r && (x + y) % 2 == 0) e.push_back({id(x, y), id(x, y + 1), 1});
    }
  }
  Multigraph g(width * r, e);
  while (true) {
    Vertex leaf = -1;
    for (Vertex v = 0; v < g.vertex_count() && leaf < 0; ++v) {
      if (g.vertex_degree(v) == 1) leaf = v;
    }
    if (leaf < 0) break;
    g = apply_step(g, DeleteVertex{leaf});
  }
  return g;
}

// Path of length n (vertices 0..n) plus the universal vertex n + 1.
Multigraph fan(int n) {
  std::vector<Edge> e;
  for (int j = 0; j < n; ++j) e.push_back({j, j + 1, 1});
  for (int j = 0; j <= n; ++j) e.push_back({j, n + 1, 1});
  return Multigraph(n + 2, e);
}

Multigraph tilde_fan(int n) {
  const Multigraph f = fan(n);
  std::vector<Edge> e;
  Vertex next = f.vertex_count();
  for (const Edge& x : f.edges()) {
    if (f.vertex_degree(x.u) == 3 && f.vertex_degree(x.v) == 3) {
      e.push_back({x.u, next, 1});
      e.push_back({next, x.v, 1});
      ++next;
    } else {
      e.push_back(x);
    }
  }
  return Multigraph(next, e);
}

Multigraph z2(int j) {
  // Poles 0 and 1; the j-1 subdivided paths use vertices 2, 3, ...
  std::vector<Edge> e;
  const int subdivided = j - 1;
  for (int p = 0; p < subdivided; ++p) {
    e.push_back({0, 2 + p, 1});
    e.push_back({2 + p, 1, 1});
  }
  if (4 - j > 0) e.push_back({0, 1, 4 - j});
  return Multigraph(2 + subdivided, e);
}

Multigraph gtight(int i) {
  const int arity = i + 1;
  const int mult = i + 2;
  std::vector<Edge> e;
  std::vector<Vertex> leaves;
  Vertex next = 0;
  std::array<Vertex, 2> centres{};
  for (Vertex& c : centres) {
    c = next++;
    std::vector<Vertex> level{c};
    for (int d = 0; d < i; ++d) {
      std::vector<Vertex> below;
      for (Vertex parent : level) {
        for (int k = 0; k < arity; ++k) {
          e.push_back({parent, next, mult});
          below.push_back(next++);
        }
      }
      level = std::move(below);
    }
    leaves.insert(leaves.end(), level.begin(), level.end());
  }
  e.push_back({centres[0], centres[1], mult});
  const Vertex x = next++;
  for (Vertex leaf : leaves) e.push_back({leaf, x, mult});
  return Multigraph(next, e);
}

Multigraph theta_bouquet(int i) {
  const std::int64_t copies = wall(i).edge_copy_count();
  std::vector<Edge> e;
  for (std::int64_t c = 0; c < copies; ++c) e.push_back({0, static_cast<Vertex>(c + 1), 3});
  return Multigraph(static_cast<int>(copies + 1), e);
}

}  // namespace

std::span<const FamilyId> all_families() { return kFamilies; }

std::string_view to_string(FamilyId f) {
  switch (f) {
    case FamilyId::cycle: return "cycle";
    case FamilyId::path: return "path";
    case FamilyId::star: return "star";
    case FamilyId::binary_tree: return "binary-tree";
    case FamilyId::grid: return "grid";
    case FamilyId::wall: return "wall";
    case FamilyId::dot_wall: return "dot-wall";
    case FamilyId::theta: return "theta";
    case FamilyId::dot_theta: return "dot-theta";
    case FamilyId::fan: return "fan";
    case FamilyId::tilde_fan: return "tilde-fan";
    case FamilyId::dot_fan: return "dot-fan";
    case FamilyId::z2: return "z2";
    case FamilyId::z3: return "z3";
    case FamilyId::gtight: return "gtight";
    case FamilyId::theta_bouquet: return "theta-bouquet";
  }
  return "?";
}

std::optional<FamilyId> family_from_string(std::string_view name) {
  std::string key(name);
  for (char& c : key) {
    if (c == '_') c = '-';
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  for (FamilyId f : kFamilies) {
    if (to_string(f) == key) return f;
  }
  // CamelCase spellings collapse to these.
  static const std::map<std::string, FamilyId> aliases = {
      {"binarytree", FamilyId::binary_tree}, {"dotwall", FamilyId::dot_wall},
      {"dottheta", FamilyId::dot_theta},     {"tildefan", FamilyId::tilde_fan},
      {"dotfan", FamilyId::dot_fan},         {"thetabouquet", FamilyId::theta_bouquet},
  };
  const auto it = aliases.find(key);
  if (it != aliases.end()) return it->second;
  return std::nullopt;
}

int family_min_index(FamilyId f) {
  switch (f) {
    case FamilyId::cycle:
    case FamilyId::z3:
    case FamilyId::wall:
    case FamilyId::dot_wall:
    case FamilyId::theta_bouquet: return 2;
    case FamilyId::binary_tree: return 0;
    case FamilyId::gtight: return 4;
    default: return 1;
  }
}

int family_max_index(FamilyId f) {
  switch (f) {
    case FamilyId::z2: return 4;
    case FamilyId::gtight: return 8;
    case FamilyId::binary_tree: return 20;
    case FamilyId::grid:
    case FamilyId::wall:
    case FamilyId::dot_wall:
    case FamilyId::theta_bouquet: return 100;
    default: return 10000;
  }
}

Multigraph generate(FamilyId f, int i) {
  const int lo = family_min_index(f);
  const int hi = family_max_index(f);
  if (i < lo || i > hi) {
    throw PreconditionError(std::string(to_string(f)) + ": index " + std::to_string(i) + " out of range");
  }
  switch (f) {
    case FamilyId::cycle: return i == 2 ? Multigraph(2, {{0, 1, 2}}) : cycle(i, 1);
    case FamilyId::path: return path(i);
    case FamilyId::star: {
      std::vector<Edge> e;
      for (int j = 1; j <= i; ++j) e.push_back({0, j, 1});
      return Multigraph(i + 1, e);
    }
    case FamilyId::binary_tree: {
      const int n = (1 << (i + 1)) - 1;
      std::vector<Edge> e;
      for (int v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v, 1});
      return Multigraph(n, e);
    }
    case FamilyId::grid: return grid(i, i);
    case FamilyId::wall: return wall(i);
    case FamilyId::dot_wall: return weak_subdivision(wall(i));
    case FamilyId::theta: return Multigraph(2, {{0, 1, i}});
    case FamilyId::dot_theta: return weak_subdivision(Multigraph(2, {{0, 1, i}}));
    case FamilyId::fan: return fan(i);
    case FamilyId::tilde_fan: return tilde_fan(i);
    case FamilyId::dot_fan: return weak_subdivision(fan(i));
    case FamilyId::z2: return z2(i);
    case FamilyId::z3: return i == 2 ? Multigraph(2, {{0, 1, 4}}) : cycle(i, 2);
    case FamilyId::gtight: return gtight(i - 3);
    case FamilyId::theta_bouquet: return theta_bouquet(i);
  }
  throw PreconditionError("unknown family");
}

}  // namespace etw
