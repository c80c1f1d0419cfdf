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

#include "etw/rewrite.hpp"

#include <algorithm>

#include "etw/error.hpp"

namespace etw {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const RewriteStep& step, std::string_view why) {
  if (!ok) throw PreconditionError(to_string(step) + ": " + std::string(why));
}

bool is_path_vertex(const Multigraph& g, Vertex v) { return g.vertex_degree(v) == 2 && g.edge_degree(v) == 2; }

// Drops vertex `gone`, optionally redirecting its edges to `into` first.
Multigraph remove_vertex(const Multigraph& g, Vertex gone, std::optional<Vertex> into) {
  auto renumber = [gone](Vertex x) { return x > gone ? x - 1 : x; };
  std::vector<Edge> out;
  for (Edge e : g.edges()) {
    if (into) {
      if (e.u == gone) e.u = *into;
      if (e.v == gone) e.v = *into;
      if (e.u == e.v) continue;
    } else if (e.u == gone || e.v == gone) {
      continue;
    }
    out.push_back({renumber(e.u), renumber(e.v), e.multiplicity});
  }
  return Multigraph(g.vertex_count() - 1, out);
}

Multigraph adjust_pairs(const Multigraph& g, std::initializer_list<Edge> delta) {
  std::vector<Edge> out = g.edges();
  for (Edge d : delta) {
    if (d.u > d.v) std::swap(d.u, d.v);
    auto it = std::find_if(out.begin(), out.end(), [&](const Edge& e) { return e.u == d.u && e.v == d.v; });
    if (it == out.end()) {
      out.push_back(d);
    } else {
      it->multiplicity += d.multiplicity;
    }
  }
  std::erase_if(out, [](const Edge& e) { return e.multiplicity == 0; });
  return Multigraph(g.vertex_count(), out);
}

}  // namespace

std::string to_string(const RewriteStep& step) {
  const auto s = [](Vertex x) { return std::to_string(x); };
  return std::visit(Overloaded{
                        [&](const DeleteVertex& d) { return "DeleteVertex(" + s(d.v) + ")"; },
                        [&](const DeleteEdgeCopy& d) { return "DeleteEdgeCopy(" + s(d.u) + "," + s(d.v) + ")"; },
                        [&](const Dissolve& d) { return "Dissolve(" + s(d.v) + ")"; },
                        [&](const Contract& d) { return "Contract(" + s(d.u) + "," + s(d.v) + ")"; },
                        [&](const WtpContract& d) { return "WtpContract(" + s(d.u) + "," + s(d.v) + ")"; },
                        [&](const Lift& d) { return "Lift(" + s(d.x) + ";" + s(d.y) + "," + s(d.z) + ")"; },
                    },
                    step);
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::minor: return "mn";
    case Relation::topological_minor: return "tp";
    case Relation::immersion: return "im";
    case Relation::weak_topological_minor: return "wtp";
  }
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view name) {
  if (name == "mn" || name == "minor") return Relation::minor;
  if (name == "tp" || name == "topological_minor" || name == "topological-minor") return Relation::topological_minor;
  if (name == "im" || name == "immersion") return Relation::immersion;
  if (name == "wtp" || name == "weak_topological_minor" || name == "weak-topological-minor") {
    return Relation::weak_topological_minor;
  }
  return std::nullopt;
}

Multigraph apply_step(const Multigraph& g, const RewriteStep& step) {
  const auto in_range = [&](Vertex x) { return g.contains_vertex(x); };
  return std::visit(
      Overloaded{
          [&](const DeleteVertex& d) {
            require(in_range(d.v), step, "no such vertex");
            return remove_vertex(g, d.v, std::nullopt);
          },
          [&](const DeleteEdgeCopy& d) {
            require(in_range(d.u) && in_range(d.v) && d.u != d.v, step, "bad endpoints");
            require(g.multiplicity(d.u, d.v) > 0, step, "pair has no copy");
            return adjust_pairs(g, {{d.u, d.v, -1}});
          },
          [&](const Dissolve& d) {
            require(in_range(d.v), step, "no such vertex");
            require(is_path_vertex(g, d.v), step, "needs vertex-degree 2 and edge-degree 2");
            const auto nb = g.neighbors(d.v);
            const Vertex a = nb[0].vertex;
            const Vertex b = nb[1].vertex;
            const Multigraph joined = adjust_pairs(g, {{a, b, 1}});
            return remove_vertex(joined, d.v, std::nullopt);
          },
          [&](const Contract& d) {
            require(in_range(d.u) && in_range(d.v) && d.u != d.v, step, "bad endpoints");
            require(g.multiplicity(d.u, d.v) > 0, step, "endpoints are not adjacent");
            return remove_vertex(g, std::max(d.u, d.v), std::min(d.u, d.v));
          },
          [&](const WtpContract& d) {
            require(in_range(d.u) && in_range(d.v) && d.u != d.v, step, "bad endpoints");
            require(g.multiplicity(d.u, d.v) > 0, step, "endpoints are not adjacent");
            require(is_path_vertex(g, d.u) && is_path_vertex(g, d.v), step,
                    "both endpoints need vertex-degree 2 and edge-degree 2");
            return remove_vertex(g, std::max(d.u, d.v), std::min(d.u, d.v));
          },
          [&](const Lift& d) {
            require(in_range(d.x) && in_range(d.y) && in_range(d.z), step, "no such vertex");
            require(d.y != d.z && d.x != d.y && d.x != d.z, step, "x, y, z must be distinct");
            require(g.multiplicity(d.x, d.y) > 0 && g.multiplicity(d.x, d.z) > 0, step,
                    "needs copies of {x,y} and {x,z}");
            return adjust_pairs(g, {{d.x, d.y, -1}, {d.x, d.z, -1}, {d.y, d.z, 1}});
          },
      },
      step);
}

std::vector<RewriteStep> deletion_steps(const Multigraph& g) {
  std::vector<RewriteStep> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.emplace_back(DeleteVertex{v});
  for (const Edge& e : g.edges()) out.emplace_back(DeleteEdgeCopy{e.u, e.v});
  return out;
}

std::vector<RewriteStep> second_phase_steps(const Multigraph& g, Relation r) {
  std::vector<RewriteStep> out;
  switch (r) {
    case Relation::minor:
      for (const Edge& e : g.edges()) out.emplace_back(Contract{e.u, e.v});
      break;
    case Relation::topological_minor:
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (is_path_vertex(g, v)) out.emplace_back(Dissolve{v});
      }
      break;
    case Relation::weak_topological_minor:
      for (const Edge& e : g.edges()) {
        if (is_path_vertex(g, e.u) && is_path_vertex(g, e.v)) out.emplace_back(WtpContract{e.u, e.v});
      }
      break;
    case Relation::immersion:
      // Lifting is symmetric in y and z, so only y < z is listed.
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const auto nb = g.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          for (std::size_t j = i + 1; j < nb.size(); ++j) out.emplace_back(Lift{x, nb[i].vertex, nb[j].vertex});
        }
      }
      break;
  }
  return out;
}

std::vector<RewriteStep> legal_steps(const Multigraph& g, Relation r) {
  std::vector<RewriteStep> out = deletion_steps(g);
  for (auto& s : second_phase_steps(g, r)) out.push_back(s);
  return out;
}

Multigraph weak_subdivision(const Multigraph& g) {
  std::vector<Edge> out;
  Vertex next = g.vertex_count();
  for (const Edge& e : g.edges()) {
    if (g.edge_degree(e.u) >= 3 && g.edge_degree(e.v) >= 3) {
      for (int c = 0; c < e.multiplicity; ++c) {
        out.push_back({e.u, next, 1});
        out.push_back({next, e.v, 1});
        ++next;
      }
    } else {
      out.push_back(e);
    }
  }
  return Multigraph(next, out);
}

}  // namespace etw
