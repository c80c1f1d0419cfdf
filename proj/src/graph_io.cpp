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

#include "etw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "etw/error.hpp"

namespace etw {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<long long> vertex_count;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front() == "n") {
      if (vertex_count) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 2) throw ParseError(line_no, "malformed header, expected 'n <count>'");
      const auto count = to_integer(tokens[1]);
      if (!count || *count < 0 || *count > 1'000'000) {
        throw ParseError(line_no, "malformed vertex count");
      }
      vertex_count = *count;
    } else if (tokens.front() == "e") {
      if (!vertex_count) throw ParseError(line_no, "edge before header");
      if (tokens.size() != 4) throw ParseError(line_no, "malformed edge, expected 'e <u> <v> <mult>'");
      const auto u = to_integer(tokens[1]);
      const auto v = to_integer(tokens[2]);
      const auto m = to_integer(tokens[3]);
      if (!u || !v || !m) throw ParseError(line_no, "malformed edge");
      if (*u < 0 || *u >= *vertex_count || *v < 0 || *v >= *vertex_count) {
        throw ParseError(line_no, "vertex out of range");
      }
      if (*u == *v) throw ParseError(line_no, "loop edge");
      if (*m <= 0 || *m > 1'000'000'000) throw ParseError(line_no, "non-positive multiplicity");
      edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v), static_cast<int>(*m)});
    } else {
      throw ParseError(line_no, "malformed line");
    }
    if (end == text.size()) break;
  }
  if (!vertex_count) throw ParseError(line_no, "missing header 'n <count>'");
  return Multigraph(static_cast<int>(*vertex_count), edges);
}

std::string serialize_graph(const Multigraph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::native) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.multiplicity << '\n';
    return out.str();
  }
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    for (int c = 0; c < e.multiplicity; ++c) out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace etw
