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
#include <span>
#include <string_view>

#include "etw/multigraph.hpp"

namespace etw {

enum class FamilyId {
  cycle,
  path,
  star,
  binary_tree,
  grid,
  wall,
  dot_wall,
  theta,
  dot_theta,
  fan,
  tilde_fan,
  dot_fan,
  z2,
  z3,
  gtight,
  theta_bouquet,
};

std::span<const FamilyId> all_families();
std::string_view to_string(FamilyId f);
std::optional<FamilyId> family_from_string(std::string_view name);
/// Index range accepted by generate(). Upper bounds keep sizes sane.
int family_min_index(FamilyId f);
int family_max_index(FamilyId f);

/// Member `i` of a family, deterministically labelled:
///   cycle i        C_i, i >= 2 (C_2 is one pair of multiplicity 2)
///   path i         P_i on i vertices, i >= 1
///   star i         K_{1,i}, centre 0, i >= 1
///   binary_tree i  complete binary tree of height i (heap order), i >= 0
///   grid i         (i x i)-grid, row-major, i >= 1
///   wall i         the i-wall, i >= 2
///   theta i        two poles joined by i parallel edges, i >= 1
///   fan i          path of length i (0..i) plus universal vertex i+1, i >= 1
///   tilde_fan i    fan with every edge between two vertex-degree-3
///                  vertices subdivided once
///   dot_*          weak_subdivision of the plain member
///   z2 j           two poles and three internally disjoint paths, j-1 of
///                  length 2 and 4-j of length 1, j in [1, 4]
///   z3 n           C_n with every edge doubled, n >= 2
///   gtight k       k = 3 + i, i >= 1: two adjacent centres, each the root
///                  of a complete (i+1)-ary tree of depth i, a universal
///                  vertex on the leaves, every multiplicity i + 2
///   theta_bouquet i  |E(W_i)| copies of theta_3 sharing vertex 0, i >= 2
/// Throws PreconditionError for an index out of range.
Multigraph generate(FamilyId f, int i);

}  // namespace etw
