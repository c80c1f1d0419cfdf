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

#include "etw/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "etw/error.hpp"

namespace etw {
namespace {

void put16(std::string& out, int x) {
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

// Stable colour classes; the colour numbering depends only on the graph's
// structure, never on labels.
std::vector<int> refine_colours(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n);
  {
    std::map<std::pair<int, int>, int> rank;
    for (Vertex v = 0; v < n; ++v) rank[{g.edge_degree(v), g.vertex_degree(v)}] = 0;
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[{g.edge_degree(v), g.vertex_degree(v)}];
  }
  int classes = -1;
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (const Neighbor& nb : g.neighbors(v)) sig[v].second.emplace_back(colour[nb.vertex], nb.multiplicity);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<Signature, int> rank;
    for (const auto& s : sig) rank[s] = 0;
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class CodeSearch {
 public:
  explicit CodeSearch(const Multigraph& g) : n_(g.vertex_count()) {
    mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (const Edge& e : g.edges()) {
      mult_[e.u * n_ + e.v] = e.multiplicity;
      mult_[e.v * n_ + e.u] = e.multiplicity;
    }
    const std::vector<int> colour = refine_colours(g);
    slot_colour_ = colour;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    colour_ = colour;
    twin_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = a + 1; b < n_; ++b) {
        bool same = colour[a] == colour[b];
        for (Vertex c = 0; same && c < n_; ++c) {
          if (c != a && c != b && m(a, c) != m(b, c)) same = false;
        }
        twin_[a * n_ + b] = twin_[b * n_ + a] = same;
      }
    }
  }

  std::string run() {
    order_.clear();
    used_.assign(n_, 0);
    current_.clear();
    best_.clear();
    have_best_ = false;
    extend();
    std::string code;
    put16(code, n_);
    for (int x : best_) put16(code, x);
    return code;
  }

 private:
  int m(Vertex a, Vertex b) const { return mult_[a * n_ + b]; }

  // Returns -1 / 0 / +1 comparing current_ with the same-length prefix of best_.
  int compare_prefix() const {
    for (std::size_t i = 0; i < current_.size(); ++i) {
      if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void extend() {
    const int pos = static_cast<int>(order_.size());
    if (pos == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[pos]) continue;
      bool twin_of_tried = false;
      for (Vertex t : tried) twin_of_tried = twin_of_tried || twin_[t * n_ + v];
      if (twin_of_tried) continue;
      tried.push_back(v);

      const std::size_t mark = current_.size();
      for (Vertex w : order_) current_.push_back(m(v, w));
      if (!have_best_ || compare_prefix() <= 0) {
        used_[v] = 1;
        order_.push_back(v);
        extend();
        order_.pop_back();
        used_[v] = 0;
      }
      current_.resize(mark);
    }
  }

  int n_;
  std::vector<int> mult_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<char> twin_;
  std::vector<Vertex> order_;
  std::vector<char> used_;
  std::vector<int> current_;
  std::vector<int> best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalCode canonical_code(const Multigraph& g, int iso_limit) {
  if (g.vertex_count() > iso_limit) {
    throw LimitExceeded("canonical code: " + std::to_string(g.vertex_count()) + " vertices exceed iso limit " +
                        std::to_string(iso_limit));
  }
  for (const Edge& e : g.edges()) {
    if (e.multiplicity > 0xffff) throw LimitExceeded("canonical code: multiplicity above 65535");
  }
  CodeSearch search(g);
  return search.run();
}

std::string labelled_code(const Multigraph& g) {
  std::string out;
  put16(out, g.vertex_count());
  for (const Edge& e : g.edges()) {
    put16(out, e.u);
    put16(out, e.v);
    put16(out, e.multiplicity);
  }
  return out;
}

}  // namespace etw
