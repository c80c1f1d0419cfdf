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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "etw/canonical.hpp"
#include "etw/multigraph.hpp"
#include "etw/rewrite.hpp"

namespace etw {

struct ContainmentOptions {
  int iso_limit = kDefaultIsoLimit;
  std::int64_t bfs_budget = 2'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class Verdict { contained, not_contained, indeterminate };

std::string_view to_string(Verdict v);

struct ContainmentResult {
  Verdict verdict = Verdict::indeterminate;
  std::int64_t states = 0;  ///< distinct graphs visited over both phases
  std::string reason;       ///< filled for indeterminate results
};

/// Is H <= G under `relation`? Breadth-first search in two phases: first
/// every graph reachable from G by deletions (never going below H's vertex
/// or edge-copy count), then the closure of those under the relation's own
/// step (for immersions, lifts plus removal of vertices left isolated).
/// Graphs are deduplicated by canonical code when small enough,
/// otherwise by their labelled form. Running out of budget, time, or
/// canonical-code range gives `indeterminate`, never `not_contained`.
ContainmentResult contains(const Multigraph& h, const Multigraph& g, Relation relation,
                           const ContainmentOptions& options = {});

}  // namespace etw
