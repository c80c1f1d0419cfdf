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
#include <string_view>
#include <vector>

#include "etw/multigraph.hpp"

namespace etw {

/// A linear ordering of all vertices of a graph.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<Vertex> order) : order_(std::move(order)) {}

  const std::vector<Vertex>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  Vertex operator[](std::size_t i) const { return order_[i]; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  /// True iff the order is a permutation of 0..|G|-1.
  bool is_layout_of(const Multigraph& g) const;

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Vertex> order_;
};

/// Selects one of the four layout cost functions. With S_i the suffix
/// starting at position i and C_i the component of G[S_i] holding its first
/// vertex:
///   v  : |N(S_i)|   (pathwidth)
///   vc : |N(C_i)|   (treewidth)
///   e  : |E(S_i)|   (cutwidth)
///   ec : |E(C_i)|   (edge-treewidth)
enum class CostKind { v, vc, e, ec };

std::string_view to_string(CostKind kind);
std::optional<CostKind> cost_kind_from_string(std::string_view name);

/// Per-position costs; edge counts include multiplicity. Throws
/// PreconditionError when `layout` is not a layout of `g`.
std::vector<std::int64_t> cost_profile(const Multigraph& g, const Layout& layout, CostKind kind);

/// max of the profile; 0 for the empty graph.
std::int64_t profile_max(const std::vector<std::int64_t>& profile);

/// Cost of placing `first` at the front of the suffix `suffix` (a membership
/// mask that contains `first`).
std::int64_t position_cost(const Multigraph& g, const std::vector<char>& suffix, Vertex first, CostKind kind);

/// "0 3 1 2" style text.
std::string format_layout(const Layout& layout);
Layout parse_layout(std::string_view text);

}  // namespace etw
