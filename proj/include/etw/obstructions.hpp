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
#include <utility>
#include <vector>

#include "etw/containment.hpp"
#include "etw/families.hpp"
#include "etw/multigraph.hpp"
#include "etw/width.hpp"

namespace etw {

/// Minimal graphs of edge-treewidth above k under weak topological minors,
/// for k in {1, 2}: {C2} and {Z2(1), ..., Z2(4)}. Any other k throws
/// PreconditionError (for k = 3 the set is infinite).
std::vector<Multigraph> fixed_obstruction_set(int k);

/// etw(H) > k while every single legal wtp step brings it down to <= k.
/// Since etw cannot grow under wtp steps, one step is enough to check.
bool minimality_check(const Multigraph& h, int k, const WidthOptions& options = {});

/// Layer i consists of generate(f, offset + i) for each listed family.
struct Antichain {
  std::vector<FamilyId> families{FamilyId::theta, FamilyId::dot_theta, FamilyId::tilde_fan, FamilyId::dot_fan,
                                 FamilyId::dot_wall};
  int offset = 3;

  std::vector<std::pair<FamilyId, Multigraph>> layer(int i) const;
};

struct UniversalPResult {
  /// Largest layer with a member contained in G (0 when none); empty when
  /// an undecided query above the best found layer leaves it open.
  std::optional<int> value;
  /// Best layer proven so far (0 when none).
  int lower_bound = 0;
  /// One line per undecided containment query.
  std::vector<std::string> undecided;
};

UniversalPResult universal_p(const Multigraph& g, int max_layer, const Antichain& spec = {},
                             const ContainmentOptions& options = {});

}  // namespace etw
