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

#include "etw/layout.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "etw/error.hpp"
#include "etw/metrics.hpp"

namespace etw {

bool Layout::is_layout_of(const Multigraph& g) const {
  if (static_cast<int>(order_.size()) != g.vertex_count()) return false;
  std::vector<char> seen(order_.size(), 0);
  for (Vertex v : order_) {
    if (!g.contains_vertex(v) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string_view to_string(CostKind kind) {
  switch (kind) {
    case CostKind::v: return "v";
    case CostKind::vc: return "vc";
    case CostKind::e: return "e";
    case CostKind::ec: return "ec";
  }
  return "?";
}

std::optional<CostKind> cost_kind_from_string(std::string_view name) {
  if (name == "v") return CostKind::v;
  if (name == "vc") return CostKind::vc;
  if (name == "e") return CostKind::e;
  if (name == "ec") return CostKind::ec;
  return std::nullopt;
}

std::int64_t position_cost(const Multigraph& g, const std::vector<char>& suffix, Vertex first, CostKind kind) {
  switch (kind) {
    case CostKind::v: return boundary_vertex_count(g, suffix);
    case CostKind::e: return boundary_edge_count(g, suffix);
    case CostKind::vc: return boundary_vertex_count(g, component_within(g, suffix, first));
    case CostKind::ec: return boundary_edge_count(g, component_within(g, suffix, first));
  }
  return 0;
}

std::vector<std::int64_t> cost_profile(const Multigraph& g, const Layout& layout, CostKind kind) {
  if (!layout.is_layout_of(g)) throw PreconditionError("not a layout of the graph");
  const int n = g.vertex_count();
  std::vector<std::int64_t> profile(n, 0);
  std::vector<char> suffix(n, 1);
  for (int i = 0; i < n; ++i) {
    profile[i] = position_cost(g, suffix, layout[i], kind);
    suffix[layout[i]] = 0;
  }
  return profile;
}

std::int64_t profile_max(const std::vector<std::int64_t>& profile) {
  return profile.empty() ? 0 : *std::max_element(profile.begin(), profile.end());
}

std::string format_layout(const Layout& layout) {
  std::ostringstream out;
  for (std::size_t i = 0; i < layout.size(); ++i) out << (i ? " " : "") << layout[i];
  return out.str();
}

Layout parse_layout(std::string_view text) {
  std::vector<Vertex> order;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\n' || text[i] == '\t' ||
                               text[i] == '\r')) {
      ++i;
    }
    if (i >= text.size()) break;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError(1, "malformed layout token");
    order.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Layout(std::move(order));
}

}  // namespace etw
