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

#include <string>

#include "etw/multigraph.hpp"

namespace etw {

/// Isomorphism-invariant byte string: equal codes iff isomorphic.
using CanonicalCode = std::string;

inline constexpr int kDefaultIsoLimit = 10;

/// Smallest adjacency encoding over all vertex orders that respect a colour
/// refinement seeded by (edge-degree, vertex-degree). Orders are enumerated
/// with prefix pruning and twin skipping. Throws LimitExceeded when the
/// graph has more than `iso_limit` vertices.
CanonicalCode canonical_code(const Multigraph& g, int iso_limit = kDefaultIsoLimit);

/// Labelled encoding (no search); equal iff the graphs are identical.
std::string labelled_code(const Multigraph& g);

}  // namespace etw
