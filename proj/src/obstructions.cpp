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

#include "etw/obstructions.hpp"

#include "etw/error.hpp"
#include "etw/rewrite.hpp"

namespace etw {

std::vector<Multigraph> fixed_obstruction_set(int k) {
  if (k == 1) return {generate(FamilyId::cycle, 2)};
  if (k == 2) {
    std::vector<Multigraph> out;
    for (int j = 1; j <= 4; ++j) out.push_back(generate(FamilyId::z2, j));
    return out;
  }
  if (k == 3) {
    throw PreconditionError("obstruction set for k = 3 is infinite: the doubled cycles Z3(n) form an infinite antichain");
  }
  throw PreconditionError("fixed obstruction sets are known for k = 1 and k = 2 only");
}

bool minimality_check(const Multigraph& h, int k, const WidthOptions& options) {
  if (edge_treewidth(h, options) <= k) return false;
  for (const RewriteStep& step : legal_steps(h, Relation::weak_topological_minor)) {
    if (edge_treewidth(apply_step(h, step), options) > k) return false;
  }
  return true;
}

std::vector<std::pair<FamilyId, Multigraph>> Antichain::layer(int i) const {
  std::vector<std::pair<FamilyId, Multigraph>> out;
  for (FamilyId f : families) out.emplace_back(f, generate(f, offset + i));
  return out;
}

UniversalPResult universal_p(const Multigraph& g, int max_layer, const Antichain& spec,
                             const ContainmentOptions& options) {
  if (max_layer < 0) throw PreconditionError("max layer must be non-negative");
  UniversalPResult out;
  bool open_above = false;
  for (int i = max_layer; i >= 0; --i) {
    bool found = false;
    bool layer_open = false;
    for (const auto& [family, member] : spec.layer(i)) {
      const ContainmentResult r = contains(member, g, Relation::weak_topological_minor, options);
      if (r.verdict == Verdict::contained) {
        found = true;
        break;
      }
      if (r.verdict == Verdict::indeterminate) {
        layer_open = true;
        out.undecided.push_back("layer " + std::to_string(i) + " " + std::string(to_string(family)) + ": " +
                                r.reason);
      }
    }
    if (found) {
      out.lower_bound = i;
      if (!open_above) out.value = i;
      return out;
    }
    open_above = open_above || layer_open;
  }
  if (!open_above) out.value = 0;
  return out;
}

}  // namespace etw
