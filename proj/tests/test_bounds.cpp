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

#include "etw/blocks.hpp"
#include "etw/bounds.hpp"
#include "etw/families.hpp"
#include "etw/graph_io.hpp"
#include "test_support.hpp"

using namespace etw;
using etw::testing::fixture;

TEST_CASE("p_block examples") {
  const Multigraph bowtie(5, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1}});
  CHECK(p_block(bowtie) == 2);
  CHECK(p_block(generate(FamilyId::theta, 5)) == 5);
  std::mt19937 rng(53);
  for (int i = 0; i < 20; ++i) {
    CHECK(p_block(etw::testing::random_tree(rng, etw::testing::uniform(rng, 2, 12))) == 1);
  }
  CHECK(p_block(Multigraph(3)) == 0);
}

TEST_CASE("p_block is local to blocks") {
  std::mt19937 rng(59);
  for (int round = 0; round < 40; ++round) {
    const Multigraph g = etw::testing::random_connected_multigraph(rng, etw::testing::uniform(rng, 1, 9), 3, 0.25);
    Multigraph all_blocks;
    for (const Block& b : block_decomposition(g).blocks) all_blocks = disjoint_union(all_blocks, b.graph);
    CHECK(p_block(g) == p_block(all_blocks));
  }
}

TEST_CASE("bound report examples") {
  const BoundReport g3 = bound_report(fixture("g3.graph"));
  CHECK(g3.etw == 6);
  CHECK(g3.all_hold());
  CHECK(g3.verdicts.size() == 6);

  const BoundReport c2 = bound_report(generate(FamilyId::cycle, 2));
  CHECK(c2.tw == 1);
  CHECK(c2.etw == 2);
  CHECK(c2.cw == 2);
  CHECK(c2.all_hold());

  const BoundReport empty = bound_report(Multigraph(3));
  CHECK(empty.tw == 0);
  CHECK(empty.etw == 0);
  CHECK(empty.cw == 0);
  CHECK(empty.p_block == 0);
  CHECK(empty.all_hold());
}

TEST_CASE("structural bounds examples") {
  const StructuralVerdicts c4 = verify_structural_bounds(generate(FamilyId::cycle, 4));
  CHECK(c4.etw == 2);
  REQUIRE(c4.rooted_bound.has_value());
  CHECK(*c4.rooted_bound);
  CHECK(c4.max_rooted == 2);

  const StructuralVerdicts t3 = verify_structural_bounds(generate(FamilyId::theta, 3));
  CHECK(t3.etw == 3);
  CHECK(t3.rooted_bound.value_or(false));
  CHECK(t3.max_rooted <= 15);

  // three triangles in a row
  const Multigraph chain(7, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 4, 1},
                             {4, 5, 1}, {5, 6, 1}, {4, 6, 1}});
  const StructuralVerdicts ch = verify_structural_bounds(chain);
  CHECK_FALSE(ch.rooted_bound.has_value());
  REQUIRE(ch.block_bound.has_value());
  CHECK(*ch.block_bound);
  CHECK(ch.block_bound_value == 8);

  const StructuralVerdicts split = verify_structural_bounds(Multigraph(2));
  CHECK_FALSE(split.block_bound.has_value());
}
