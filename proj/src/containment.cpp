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

#include "etw/containment.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "etw/error.hpp"

namespace etw {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::contained: return "contained";
    case Verdict::not_contained: return "not_contained";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

class Search {
 public:
  Search(const Multigraph& h, Relation relation, const ContainmentOptions& options)
      : relation_(relation),
        options_(options),
        target_v_(h.vertex_count()),
        target_e_(h.edge_copy_count()),
        target_(canonical_code(h, options.iso_limit)) {}

  ContainmentResult run(const Multigraph& g) {
    std::vector<Multigraph> seeds;
    std::deque<Multigraph> queue;
    if (!admit(g, seen_phase1_)) return result_;
    queue.push_back(g);
    while (!queue.empty()) {
      Multigraph cur = std::move(queue.front());
      queue.pop_front();
      if (matches(cur)) return done(Verdict::contained);
      if (may_start_phase2(cur)) seeds.push_back(cur);
      for (const RewriteStep& step : deletion_steps(cur)) {
        Multigraph next = apply_step(cur, step);
        if (!fits(next)) continue;
        if (!admit(next, seen_phase1_)) return result_;
        if (fresh_) queue.push_back(std::move(next));
      }
    }
    for (Multigraph& s : seeds) {
      if (!admit(s, seen_phase2_)) return result_;
      if (fresh_) queue.push_back(std::move(s));
    }
    while (!queue.empty()) {
      Multigraph cur = std::move(queue.front());
      queue.pop_front();
      if (matches(cur)) return done(Verdict::contained);
      std::vector<RewriteStep> steps = second_phase_steps(cur, relation_);
      if (relation_ == Relation::immersion) {
        // A vertex stripped bare by lifts is dropped, as in the usual
        // reading where dissolving is a lift followed by this deletion.
        for (Vertex v = 0; v < cur.vertex_count(); ++v) {
          if (cur.vertex_degree(v) == 0) steps.emplace_back(DeleteVertex{v});
        }
      }
      for (const RewriteStep& step : steps) {
        Multigraph next = apply_step(cur, step);
        if (!fits(next) || !may_start_phase2(next)) continue;
        if (!admit(next, seen_phase2_)) return result_;
        if (fresh_) queue.push_back(std::move(next));
      }
    }
    return done(Verdict::not_contained);
  }

 private:
  bool fits(const Multigraph& x) const {
    return x.vertex_count() >= target_v_ && x.edge_copy_count() >= target_e_;
  }

  // Each second-phase step changes the counts in a fixed way, so only
  // graphs whose surplus can still reach H's counts exactly are useful.
  bool may_start_phase2(const Multigraph& x) const {
    const std::int64_t dv = x.vertex_count() - target_v_;
    const std::int64_t de = x.edge_copy_count() - target_e_;
    switch (relation_) {
      case Relation::topological_minor:
      case Relation::weak_topological_minor: return dv == de;
      case Relation::immersion: return dv >= 0 && de >= 0;
      case Relation::minor: return de >= dv;
    }
    return true;
  }

  bool matches(const Multigraph& x) const {
    return x.vertex_count() == target_v_ && x.edge_copy_count() == target_e_ &&
           canonical_code(x, options_.iso_limit) == target_;
  }

  std::string key(const Multigraph& x) const {
    if (x.vertex_count() <= options_.iso_limit) return "c" + canonical_code(x, options_.iso_limit);
    return "l" + labelled_code(x);
  }

  // Records x; false means the search must stop (result_ is set).
  bool admit(const Multigraph& x, std::unordered_set<std::string>& seen) {
    fresh_ = seen.insert(key(x)).second;
    if (!fresh_) return true;
    ++result_.states;
    if (result_.states > options_.bfs_budget) {
      result_.verdict = Verdict::indeterminate;
      result_.reason = "state budget of " + std::to_string(options_.bfs_budget) + " exceeded";
      return false;
    }
    if (options_.deadline && (result_.states & 255) == 0 && std::chrono::steady_clock::now() > *options_.deadline) {
      result_.verdict = Verdict::indeterminate;
      result_.reason = "timeout";
      return false;
    }
    return true;
  }

  ContainmentResult done(Verdict v) {
    result_.verdict = v;
    return result_;
  }

  Relation relation_;
  ContainmentOptions options_;
  int target_v_;
  std::int64_t target_e_;
  CanonicalCode target_;
  std::unordered_set<std::string> seen_phase1_;
  std::unordered_set<std::string> seen_phase2_;
  bool fresh_ = false;
  ContainmentResult result_;
};

}  // namespace

ContainmentResult contains(const Multigraph& h, const Multigraph& g, Relation relation,
                           const ContainmentOptions& options) {
  if (h.vertex_count() > g.vertex_count() || h.edge_copy_count() > g.edge_copy_count()) {
    return {Verdict::not_contained, 0, {}};
  }
  if (relation == Relation::weak_topological_minor) {
    // Wtp steps never raise an existing multiplicity and create new pairs
    // of multiplicity 2 at most.
    int mh = 0;
    int mg = 2;
    for (const Edge& e : h.edges()) mh = std::max(mh, e.multiplicity);
    for (const Edge& e : g.edges()) mg = std::max(mg, e.multiplicity);
    if (mh > mg) return {Verdict::not_contained, 0, {}};
  }
  if (h.vertex_count() > options.iso_limit) {
    return {Verdict::indeterminate, 0, "pattern has more vertices than the iso limit"};
  }
  Search search(h, relation, options);
  return search.run(g);
}

}  // namespace etw
