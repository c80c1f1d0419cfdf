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

#include "etw/bounds.hpp"
#include "etw/error.hpp"
#include "etw/graph_io.hpp"
#include "etw/tree_layout.hpp"
#include "etw/width.hpp"
#include "test_support.hpp"
#include "tree_layout_support.hpp"

using namespace etw;
using etw::testing::fixture;

TEST_CASE("fixture tree-layouts certify their values") {
  const std::pair<const char*, std::int64_t> cases[] = {{"g1", 3}, {"g2", 4}, {"g3", 6}, {"g4", 8}};
  for (const auto& [name, value] : cases) {
    CAPTURE(name);
    const Multigraph g = fixture(std::string(name) + ".graph");
    const TreeLayout t = parse_tree_layout(read_text_file(etw::testing::fixture_path(std::string(name) + ".tree")));
    CHECK(validate_tree_layout(g, t).valid);
    CHECK(tree_cost_profile(g, t, TreeCostKind::e).max == value);
  }
}

TEST_CASE("shape checks") {
  CHECK_THROWS_AS(TreeLayout(0, {-1, 2, 1}, {}), PreconditionError);  // 1 and 2 form a cycle
  CHECK_THROWS_AS(TreeLayout(0, {1, 0}, {}), PreconditionError);
  CHECK_THROWS_AS(TreeLayout(0, {-1}, {1}), PreconditionError);
  const TreeLayout t(0, {-1, 0, 0}, {1, 2});
  CHECK(t.children(0) == std::vector<int>{1, 2});
  CHECK(t.vertex_at(0) == -1);
  CHECK(t.is_ancestor(0, 2));
  CHECK_FALSE(t.is_ancestor(1, 2));
  CHECK(t.depth(2) == 1);
}

TEST_CASE("validation reports incomparable edges and shared nodes") {
  const Multigraph path(3, {{0, 1, 1}, {1, 2, 1}});
  const TreeLayout siblings(0, {-1, 0, 0}, {0, 1, 2});
  const TreeLayoutVerdict v = validate_tree_layout(path, siblings);
  CHECK_FALSE(v.valid);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0] == Edge{1, 2, 1});

  const TreeLayout shared(0, {-1, 0}, {0, 1, 1});
  CHECK_FALSE(validate_tree_layout(path, shared).valid);
  CHECK_FALSE(validate_tree_layout(path, TreeLayout(0, {-1}, {0})).valid);
  CHECK_THROWS_AS(tree_cost_profile(path, siblings, TreeCostKind::e), PreconditionError);
}

TEST_CASE("layouts and tree-layouts convert without losing width") {
  std::mt19937 rng(17);
  for (int round = 0; round < 200; ++round) {
    const int n = etw::testing::uniform(rng, 1, 8);
    const Multigraph g = etw::testing::random_multigraph(rng, n, 3, 0.35);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Layout l(order);
    const TreeLayout t = layout_to_tree_layout(g, l);
    REQUIRE(validate_tree_layout(g, t).valid);
    CHECK(tree_cost_profile(g, t, TreeCostKind::e).max <= profile_max(cost_profile(g, l, CostKind::ec)));
    CHECK(tree_cost_profile(g, t, TreeCostKind::v).max <= profile_max(cost_profile(g, l, CostKind::vc)));

    const TreeLayout r = etw::testing::random_tree_layout(g, rng);
    REQUIRE(validate_tree_layout(g, r).valid);
    const Layout back = tree_layout_to_layout(g, r);
    CHECK(back.is_layout_of(g));
    CHECK(profile_max(cost_profile(g, back, CostKind::ec)) <= tree_cost_profile(g, r, TreeCostKind::e).max);
  }
}

TEST_CASE("optimal layouts give optimal tree-layouts") {
  for (const char* name : {"g1.graph", "g2.graph", "g3.graph", "g4.graph"}) {
    const Multigraph g = fixture(name);
    const WidthCertificate c = width_exact(g, CostKind::ec);
    CHECK(tree_cost_profile(g, layout_to_tree_layout(g, c.witness), TreeCostKind::e).max == c.value);
  }
}

TEST_CASE("layout to tree-layout shape") {
  // 0 and 2 are not adjacent: after 1 goes, they split into two branches
  const Multigraph path(3, {{0, 1, 1}, {1, 2, 1}});
  const TreeLayout t = layout_to_tree_layout(path, Layout({1, 0, 2}));
  CHECK(t.vertex_at(t.root()) == -1);
  CHECK(t.parent(t.node_of(0)) == t.node_of(1));
  CHECK(t.parent(t.node_of(2)) == t.node_of(1));
  CHECK(tree_layout_to_layout(path, t) == Layout({1, 0, 2}));
}

TEST_CASE("block tree-layouts") {
  const RootedSolver solver = exact_rooted_solver();
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    const Multigraph tree = etw::testing::random_tree(rng, etw::testing::uniform(rng, 1, 15));
    const TreeLayout t = block_tree_layout(tree, solver);
    REQUIRE(validate_tree_layout(tree, t).valid);
    CHECK(tree_cost_profile(tree, t, TreeCostKind::e).max <= 1);
    CHECK(t.vertex_at(t.root()) != -1);

    const Multigraph cactus = etw::testing::random_cactus(rng, etw::testing::uniform(rng, 2, 14));
    const TreeLayout c = block_tree_layout(cactus, solver);
    REQUIRE(validate_tree_layout(cactus, c).valid);
    CHECK(tree_cost_profile(cactus, c, TreeCostKind::e).max <= 2);
  }
  CHECK_THROWS_AS(block_tree_layout(Multigraph(2), solver), PreconditionError);
  CHECK(block_tree_layout(Multigraph(1), solver).node_count() == 1);
}

TEST_CASE("text form round trip and errors") {
  const Multigraph g = fixture("g3.graph");
  const TreeLayout t = layout_to_tree_layout(g, width_exact(g, CostKind::ec).witness);
  CHECK(parse_tree_layout(serialize_tree_layout(t)) == t);
  CHECK_THROWS_AS(parse_tree_layout("p 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_tree_layout("r 0\nr 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tree_layout("r 0\np 2 0\n"), ParseError);  // node 1 has no parent
  CHECK_THROWS_AS(parse_tree_layout("r 0\np 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_tree_layout("r 0\nq\n"), ParseError);
}
