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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etw/multigraph.hpp"

namespace etw {

struct DeleteVertex {
  Vertex v;
  friend bool operator==(const DeleteVertex&, const DeleteVertex&) = default;
};
/// Removes one copy of {u, v}; the vertices stay.
struct DeleteEdgeCopy {
  Vertex u, v;
  friend bool operator==(const DeleteEdgeCopy&, const DeleteEdgeCopy&) = default;
};
/// v must have vertex-degree 2 and edge-degree 2. Its two neighbours gain
/// one copy of the pair between them.
struct Dissolve {
  Vertex v;
  friend bool operator==(const Dissolve&, const Dissolve&) = default;
};
/// Merges v into u (the smaller id survives). All copies of {u, v}
/// disappear, other multiplicities are summed.
struct Contract {
  Vertex u, v;
  friend bool operator==(const Contract&, const Contract&) = default;
};
/// Contract restricted to pairs whose endpoints both have vertex-degree 2
/// and edge-degree 2.
struct WtpContract {
  Vertex u, v;
  friend bool operator==(const WtpContract&, const WtpContract&) = default;
};
/// Takes one copy of {x, y} and one of {x, z} and replaces them by {y, z}.
struct Lift {
  Vertex x, y, z;
  friend bool operator==(const Lift&, const Lift&) = default;
};

using RewriteStep = std::variant<DeleteVertex, DeleteEdgeCopy, Dissolve, Contract, WtpContract, Lift>;

std::string to_string(const RewriteStep& step);

enum class Relation { minor, topological_minor, immersion, weak_topological_minor };

std::string_view to_string(Relation r);
/// Accepts mn/tp/im/wtp and the long names.
std::optional<Relation> relation_from_string(std::string_view name);

/// Applies one step. Vertices are renumbered densely afterwards (a removed
/// vertex shifts every larger id down by one). Throws PreconditionError
/// naming the step when its precondition fails.
Multigraph apply_step(const Multigraph& g, const RewriteStep& step);

/// DeleteVertex for every vertex, DeleteEdgeCopy for every pair.
std::vector<RewriteStep> deletion_steps(const Multigraph& g);
/// The relation's own operation at every place it applies.
std::vector<RewriteStep> second_phase_steps(const Multigraph& g, Relation r);
/// deletion_steps followed by second_phase_steps.
std::vector<RewriteStep> legal_steps(const Multigraph& g, Relation r);

/// Subdivides once every copy of every pair whose endpoints both have
/// edge-degree at least 3. New vertices are appended, pair by pair in
/// (u, v) order.
Multigraph weak_subdivision(const Multigraph& g);

}  // namespace etw
