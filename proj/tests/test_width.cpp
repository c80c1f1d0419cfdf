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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "etw/error.hpp"
#include "etw/graph_io.hpp"
#include "etw/layout.hpp"
#include "etw/width.hpp"
#include "test_support.hpp"

using namespace etw;
using etw::testing::brute_force_width;
using etw::testing::fixture;

namespace {
constexpr CostKind kKinds[] = {CostKind::v, CostKind::vc, CostKind::e, CostKind::ec};
}

TEST_CASE("cost profiles on a hand-checked layout") {
  const Multigraph g = fixture("g1.graph");
  const Layout l({3, 1, 0, 2});
  // suffixes {1,0,2}: ec 3 (all apex edges), {0,2}: two components, x=0
  // gives 0-3 and 0-1 x2; {2}: 2-3 and 1-2 x2.
  CHECK(cost_profile(g, l, CostKind::ec) == std::vector<std::int64_t>{0, 3, 3, 3});
  CHECK(cost_profile(g, l, CostKind::e) == std::vector<std::int64_t>{0, 3, 6, 3});
  CHECK(cost_profile(g, l, CostKind::v) == std::vector<std::int64_t>{0, 1, 2, 2});
  CHECK(cost_profile(g, l, CostKind::vc) == std::vector<std::int64_t>{0, 1, 2, 2});
  CHECK(profile_max(cost_profile(g, l, CostKind::ec)) == 3);
  CHECK_THROWS_AS(cost_profile(g, Layout({0, 1, 2}), CostKind::ec), PreconditionError);
  CHECK_THROWS_AS(cost_profile(g, Layout({0, 1, 2, 2}), CostKind::ec), PreconditionError);
}

TEST_CASE("profiles agree with the naive cost") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = etw::testing::uniform(rng, 1, 8);
    const Multigraph g = etw::testing::random_multigraph(rng, n, 3, 0.4);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (CostKind k : kKinds) {
      const auto prof = cost_profile(g, Layout(order), k);
      for (int i = 1; i < n; ++i) CHECK(prof[i] == etw::testing::naive_cost(g, order, i, k));
      CHECK(prof[0] == 0);
    }
  }
}

TEST_CASE("layout text") {
  CHECK(format_layout(Layout({0, 3, 1, 2})) == "0 3 1 2");
  CHECK(parse_layout(" 0 3\n1 2 ") == Layout({0, 3, 1, 2}));
  CHECK_THROWS_AS(parse_layout("0 x"), ParseError);
  CHECK(cost_kind_from_string("ec") == CostKind::ec);
  CHECK_FALSE(cost_kind_from_string("zz").has_value());
}

TEST_CASE("fixture widths") {
  CHECK(edge_treewidth(fixture("g1.graph")) == 3);
  CHECK(edge_treewidth(fixture("g2.graph")) == 4);
  CHECK(edge_treewidth(fixture("g3.graph")) == 6);
  CHECK(edge_treewidth(fixture("g4.graph")) == 8);
  CHECK(edge_treewidth(Multigraph(0)) == 0);
  CHECK(edge_treewidth(Multigraph(1)) == 0);
  CHECK(edge_treewidth(Multigraph(2, {{0, 1, 5}})) == 5);
  // every vertex of a theta touches one component, so tw is 1
  CHECK(width_exact(Multigraph(2, {{0, 1, 5}}), CostKind::vc).value == 1);
}

TEST_CASE("exact solvers match exhaustive search") {
  std::mt19937 rng(5);
  for (int round = 0; round < 120; ++round) {
    const int n = etw::testing::uniform(rng, 1, 7);
    const Multigraph g = etw::testing::random_multigraph(rng, n, 3, 0.45);
    CAPTURE(serialize_graph(g));
    for (CostKind k : kKinds) {
      const std::int64_t expected = brute_force_width(g, k);
      const WidthCertificate dp = width_exact(g, k);
      CHECK(dp.value == expected);
      CHECK_NOTHROW(check_certificate(g, dp));
      const WidthCertificate bnb = width_exact(g, k, std::nullopt, SolveMode::branch_and_bound);
      CHECK(bnb.value == expected);
      CHECK_NOTHROW(check_certificate(g, bnb));
      CHECK(width_exact(g, k, std::nullopt, SolveMode::greedy_upper).value >= expected);
    }
  }
}

TEST_CASE("rooted widths match exhaustive search") {
  std::mt19937 rng(9);
  for (int round = 0; round < 60; ++round) {
    const int n = etw::testing::uniform(rng, 1, 6);
    const Multigraph g = etw::testing::random_multigraph(rng, n, 2, 0.5);
    const Vertex root = etw::testing::uniform(rng, 0, n - 1);
    for (CostKind k : kKinds) {
      const WidthCertificate c = width_exact(g, k, root);
      CHECK(c.value == brute_force_width(g, k, root));
      CHECK(c.witness[0] == root);
      CHECK(width_exact(g, k, root, SolveMode::branch_and_bound).value == c.value);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  std::mt19937 rng(3);
  for (int round = 0; round < 5; ++round) {
    const Multigraph g = etw::testing::random_connected_multigraph(rng, 17, 3, 0.25);
    WidthOptions one;
    one.threads = 1;
    WidthOptions four;
    four.threads = 4;
    const WidthCertificate a = width_exact(g, CostKind::ec, std::nullopt, SolveMode::dp, one);
    const WidthCertificate b = width_exact(g, CostKind::ec, std::nullopt, SolveMode::dp, four);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("degeneracy lower bound") {
  std::mt19937 rng(13);
  for (int round = 0; round < 100; ++round) {
    const Multigraph g = etw::testing::random_multigraph(rng, etw::testing::uniform(rng, 1, 8), 3, 0.5);
    CHECK(etw_degeneracy_lower_bound(g) <= edge_treewidth(g));
  }
  CHECK(etw_degeneracy_lower_bound(Multigraph(2, {{0, 1, 4}})) == 4);
}

TEST_CASE("limits and preconditions") {
  WidthOptions small;
  small.exact_limit = 5;
  std::mt19937 seed_rng(1);
  const Multigraph g = etw::testing::random_connected_multigraph(seed_rng, 6, 1, 0.3);
  CHECK_THROWS_AS(width_exact(g, CostKind::ec, std::nullopt, SolveMode::dp, small), LimitExceeded);
  CHECK_NOTHROW(width_exact(g, CostKind::ec, std::nullopt, SolveMode::greedy_upper, small));
  CHECK_THROWS_AS(width_exact(g, CostKind::ec, 17), PreconditionError);

  WidthOptions past;
  past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  std::mt19937 rng(2);
  const Multigraph big = etw::testing::random_connected_multigraph(rng, 20, 2, 0.3);
  CHECK_THROWS_AS(width_exact(big, CostKind::ec, std::nullopt, SolveMode::dp, past), LimitExceeded);

  WidthCertificate bad = width_exact(fixture("g1.graph"), CostKind::ec);
  bad.value = 2;
  CHECK_THROWS_AS(check_certificate(fixture("g1.graph"), bad), InvariantError);
}
