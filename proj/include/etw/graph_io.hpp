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

#include <filesystem>
#include <string>
#include <string_view>

#include "etw/multigraph.hpp"

namespace etw {

enum class GraphFormat { native, dot };

/// Parses the line-oriented native format:
///
///     # optional comments
///     n <vertex count>
///     e <u> <v> <multiplicity>
///
/// Repeated pairs are merged. Throws ParseError carrying the offending line.
Multigraph parse_graph(std::string_view text);

/// Native output lists pairs sorted by (u, v) with u < v; DOT output emits
/// one undirected edge statement per copy.
std::string serialize_graph(const Multigraph& g, GraphFormat format = GraphFormat::native);

Multigraph read_graph_file(const std::filesystem::path& path);

/// Whole-file read; throws Error when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace etw
