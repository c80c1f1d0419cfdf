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

#include "etw/width.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "etw/error.hpp"

namespace etw {
namespace {

using Mask = std::uint32_t;

/// Bitmask view of a graph with at most kMaxExactVertices vertices.
/// Multiplicities are bit-sliced so that the weight between a vertex and a
/// set is a handful of popcounts.
class MaskGraph {
 public:
  explicit MaskGraph(const Multigraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    int max_mult = 1;
    for (const Edge& e : g.edges()) max_mult = std::max(max_mult, e.multiplicity);
    layers_ = std::bit_width(static_cast<unsigned>(max_mult));
    slices_.assign(static_cast<std::size_t>(layers_) * n_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
      for (int b = 0; b < layers_; ++b) {
        if ((e.multiplicity >> b) & 1) {
          slices_[b * n_ + e.u] |= Mask{1} << e.v;
          slices_[b * n_ + e.v] |= Mask{1} << e.u;
        }
      }
    }
    full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
  }

  int size() const { return n_; }
  Mask full() const { return full_; }

  Mask neighbors_of(Mask set) const {
    Mask out = 0;
    for (Mask rest = set; rest; rest &= rest - 1) out |= adj_[std::countr_zero(rest)];
    return out;
  }

  /// Edge copies between `set` and `outside` (disjoint).
  std::uint32_t weight(Mask set, Mask outside) const {
    std::uint32_t total = 0;
    for (Mask rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (int b = 0; b < layers_; ++b) {
        total += static_cast<std::uint32_t>(std::popcount(slices_[b * n_ + v] & outside)) << b;
      }
    }
    return total;
  }

  /// Component of G[set] containing the lowest vertex of `seed`.
  Mask component(Mask set, Mask seed) const {
    Mask comp = seed;
    Mask frontier = seed;
    while (frontier) {
      const Mask next = neighbors_of(frontier) & set & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  /// Cost of placing x first in suffix `s`.
  std::uint32_t cost(Mask s, int x, CostKind kind) const {
    const Mask outside = full_ & ~s;
    switch (kind) {
      case CostKind::v: return static_cast<std::uint32_t>(std::popcount(neighbors_of(s) & outside));
      case CostKind::e: return weight(s, outside);
      case CostKind::vc:
        return static_cast<std::uint32_t>(std::popcount(neighbors_of(component(s, Mask{1} << x)) & outside));
      case CostKind::ec: return weight(component(s, Mask{1} << x), outside);
    }
    return 0;
  }

 private:
  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> slices_;
  int layers_ = 1;
  Mask full_ = 0;
};

class DeadlineGuard {
 public:
  explicit DeadlineGuard(const WidthOptions& options) : deadline_(options.deadline) {}

  void tick() {
    if (!deadline_ || (++calls_ & 0xFFFF) != 0) return;
    if (std::chrono::steady_clock::now() > *deadline_) throw LimitExceeded("timeout");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t calls_ = 0;
};

class SubsetDp {
 public:
  SubsetDp(const MaskGraph& g, CostKind kind) : g_(g), kind_(kind), table_(std::size_t{1} << g.size(), 0) {}

  void solve(int threads, const WidthOptions& options) {
    const int n = g_.size();
    if (threads <= 1 || n < 16) {
      DeadlineGuard guard(options);
      const std::size_t count = table_.size();
      for (std::size_t s = 1; s < count; ++s) {
        table_[s] = evaluate(static_cast<Mask>(s));
        guard.tick();
      }
      return;
    }
    // Layers by popcount; each layer reads only the previous ones.
    std::vector<std::vector<Mask>> layers(n + 1);
    for (std::size_t s = 1; s < table_.size(); ++s) layers[std::popcount(s)].push_back(static_cast<Mask>(s));
    for (int k = 1; k <= n; ++k) {
      const auto& layer = layers[k];
      const std::size_t chunk = (layer.size() + threads - 1) / threads;
      std::vector<std::jthread> workers;
      std::vector<char> timed_out(threads, 0);
      for (int t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(layer.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([this, &layer, lo, hi, &options, &timed_out, t] {
          DeadlineGuard guard(options);
          try {
            for (std::size_t i = lo; i < hi; ++i) {
              table_[layer[i]] = evaluate(layer[i]);
              guard.tick();
            }
          } catch (const LimitExceeded&) {
            timed_out[t] = 1;
          }
        });
      }
      workers.clear();
      if (std::find(timed_out.begin(), timed_out.end(), 1) != timed_out.end()) throw LimitExceeded("timeout");
    }
  }

  std::uint32_t value(Mask s) const { return table_[s]; }

  /// Lowest x in s achieving the table value of s.
  int best_first(Mask s) const {
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if (std::max(g_.cost(s, x, kind_), table_[s & ~(Mask{1} << x)]) == table_[s]) return x;
    }
    throw InvariantError("subset DP table is inconsistent");
  }

 private:
  std::uint32_t evaluate(Mask s) const {
    const Mask outside = g_.full() & ~s;
    if (kind_ == CostKind::v || kind_ == CostKind::e) {
      const std::uint32_t here = kind_ == CostKind::v
                                     ? static_cast<std::uint32_t>(std::popcount(g_.neighbors_of(s) & outside))
                                     : g_.weight(s, outside);
      std::uint32_t rest_best = std::numeric_limits<std::uint32_t>::max();
      for (Mask rest = s; rest; rest &= rest - 1) {
        rest_best = std::min(rest_best, table_[s & ~(rest & -rest)]);
      }
      return std::max(here, rest_best);
    }
    // Every vertex of a component of G[s] shares that component's cost.
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    Mask remaining = s;
    while (remaining) {
      const Mask comp = g_.component(s, remaining & -remaining);
      remaining &= ~comp;
      const std::uint32_t here = kind_ == CostKind::vc
                                     ? static_cast<std::uint32_t>(std::popcount(g_.neighbors_of(comp) & outside))
                                     : g_.weight(comp, outside);
      if (here >= best) continue;
      std::uint32_t rest_best = std::numeric_limits<std::uint32_t>::max();
      for (Mask rest = comp; rest; rest &= rest - 1) {
        rest_best = std::min(rest_best, table_[s & ~(rest & -rest)]);
      }
      best = std::min(best, std::max(here, rest_best));
    }
    return best;
  }

  const MaskGraph& g_;
  CostKind kind_;
  std::vector<std::uint32_t> table_;
};

class BranchAndBound {
 public:
  BranchAndBound(const MaskGraph& g, CostKind kind, const WidthOptions& options)
      : g_(g), kind_(kind), guard_(options) {}

  void run(Mask placed, std::vector<int> prefix, std::uint32_t upper, std::vector<int> upper_witness) {
    best_ = upper;
    best_order_ = std::move(upper_witness);
    order_ = std::move(prefix);
    search(placed, 0);
  }

  std::uint32_t best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void search(Mask placed, std::uint32_t current) {
    guard_.tick();
    if (placed == g_.full()) {
      if (current < best_) {
        best_ = current;
        best_order_ = order_;
      }
      return;
    }
    const auto [it, inserted] = seen_.try_emplace(placed, current);
    if (!inserted) {
      if (it->second <= current) return;
      it->second = current;
    }
    const Mask suffix = g_.full() & ~placed;
    std::vector<std::pair<std::uint32_t, int>> moves;
    for (Mask rest = suffix; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      moves.emplace_back(std::max(current, g_.cost(suffix, x, kind_)), x);
    }
    std::sort(moves.begin(), moves.end());
    for (const auto& [cost, x] : moves) {
      if (cost >= best_) break;
      order_.push_back(x);
      search(placed | (Mask{1} << x), cost);
      order_.pop_back();
    }
  }

  const MaskGraph& g_;
  CostKind kind_;
  DeadlineGuard guard_;
  std::unordered_map<Mask, std::uint32_t> seen_;
  std::vector<int> order_;
  std::vector<int> best_order_;
  std::uint32_t best_ = 0;
};

WidthCertificate greedy(const Multigraph& g, CostKind kind, std::optional<Vertex> root) {
  const int n = g.vertex_count();
  std::vector<char> suffix(n, 1);
  std::vector<Vertex> order;
  std::int64_t value = 0;
  auto place = [&](Vertex x, std::int64_t cost) {
    order.push_back(x);
    suffix[x] = 0;
    value = std::max(value, cost);
  };
  if (root) place(*root, position_cost(g, suffix, *root, kind));
  while (static_cast<int>(order.size()) < n) {
    Vertex pick = -1;
    std::int64_t pick_cost = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (!suffix[x]) continue;
      const std::int64_t c = position_cost(g, suffix, x, kind);
      if (pick == -1 || c < pick_cost) {
        pick = x;
        pick_cost = c;
      }
    }
    place(pick, pick_cost);
  }
  return {value, Layout(std::move(order)), kind, root};
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::optional<SolveMode> solve_mode_from_string(std::string_view name) {
  if (name == "dp") return SolveMode::dp;
  if (name == "bnb" || name == "branch_and_bound" || name == "branch-and-bound") return SolveMode::branch_and_bound;
  if (name == "greedy" || name == "greedy_upper" || name == "greedy-upper") return SolveMode::greedy_upper;
  return std::nullopt;
}

WidthCertificate width_exact(const Multigraph& g, CostKind kind, std::optional<Vertex> root, SolveMode mode,
                             const WidthOptions& options) {
  const int n = g.vertex_count();
  if (root && !g.contains_vertex(*root)) throw PreconditionError("root is not a vertex of the graph");
  if (n == 0) return {0, Layout{}, kind, root};
  if (mode == SolveMode::greedy_upper) return greedy(g, kind, root);

  const int limit = std::min(options.exact_limit, kMaxExactVertices);
  if (n > limit) {
    throw LimitExceeded("exact width needs |V| <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
  if (g.edge_copy_count() > std::numeric_limits<std::int32_t>::max()) {
    throw LimitExceeded("too many edge copies for the exact solver");
  }
  const MaskGraph mg(g);

  if (mode == SolveMode::dp) {
    SubsetDp dp(mg, kind);
    dp.solve(resolve_threads(options.threads), options);
    std::vector<Vertex> order;
    Mask s = mg.full();
    if (root) {
      order.push_back(*root);
      s &= ~(Mask{1} << *root);
    }
    const std::uint32_t value = dp.value(s);
    while (s) {
      const int x = dp.best_first(s);
      order.push_back(x);
      s &= ~(Mask{1} << x);
    }
    return {value, Layout(std::move(order)), kind, root};
  }

  const WidthCertificate seed = greedy(g, kind, root);
  BranchAndBound bnb(mg, kind, options);
  Mask placed = 0;
  std::vector<int> prefix;
  if (root) {
    placed = Mask{1} << *root;
    prefix.push_back(*root);
  }
  bnb.run(placed, prefix, static_cast<std::uint32_t>(seed.value), seed.witness.order());
  return {bnb.best(), Layout(bnb.best_order()), kind, root};
}

std::int64_t edge_treewidth(const Multigraph& g, const WidthOptions& options) {
  return width_exact(g, CostKind::ec, std::nullopt, SolveMode::dp, options).value;
}

std::int64_t etw_degeneracy_lower_bound(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::int64_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.edge_degree(v);
  std::vector<char> alive(n, 1);
  std::int64_t best = 0;
  for (int round = 0; round < n; ++round) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (pick == -1 || degree[v] < degree[pick])) pick = v;
    }
    best = std::max(best, degree[pick]);
    alive[pick] = 0;
    for (const Neighbor& nb : g.neighbors(pick)) {
      if (alive[nb.vertex]) degree[nb.vertex] -= nb.multiplicity;
    }
  }
  return best;
}

void check_certificate(const Multigraph& g, const WidthCertificate& cert) {
  if (!cert.witness.is_layout_of(g)) throw InvariantError("witness is not a layout of the graph");
  if (cert.rooted_at && (cert.witness.size() == 0 || cert.witness[0] != *cert.rooted_at)) {
    throw InvariantError("witness does not start at the requested root");
  }
  const std::int64_t evaluated = profile_max(cost_profile(g, cert.witness, cert.kind));
  if (evaluated != cert.value) {
    throw InvariantError("witness evaluates to " + std::to_string(evaluated) + ", certificate claims " +
                         std::to_string(cert.value));
  }
}

}  // namespace etw
