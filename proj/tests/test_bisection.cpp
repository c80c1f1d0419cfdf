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

#include "etw/bisection.hpp"
#include "etw/error.hpp"
#include "etw/families.hpp"
#include "test_support.hpp"

using namespace etw;

namespace {

const Multigraph kTwoEdges(4, {{0, 1, 1}, {2, 3, 1}});

// Sweeps every subset whose size is ceil(n/2), i.e. the complements of the
// sides the library looks at.
std::int64_t complement_sweep(const Multigraph& g) {
  const int n = g.vertex_count();
  const int size = n - n / 2;
  std::int64_t best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != size) continue;
    std::int64_t cut = 0;
    for (const Edge& e : g.edges()) {
      if (((s >> e.u) & 1u) != ((s >> e.v) & 1u)) cut += e.multiplicity;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return std::max<std::int64_t>(best, 0);
}

}  // namespace

TEST_CASE("reduction sizes") {
  const EtwInstance c4 = reduce_bisection_to_etw({generate(FamilyId::cycle, 4), 2});
  CHECK(c4.h.vertex_count() == 20);
  CHECK(c4.h.edge_copy_count() == 4 + 64);
  CHECK(c4.w == 34);
  const EtwInstance two = reduce_bisection_to_etw({kTwoEdges, 0});
  CHECK(two.h.edge_copy_count() == 2 + 64);
  CHECK(two.w == 32);
  CHECK(two.h.multiplicity(0, 4) == 1);
  CHECK(two.h.multiplicity(4, 5) == 0);
  CHECK_THROWS_AS(reduce_bisection_to_etw({generate(FamilyId::cycle, 3), 1}), PreconditionError);
  CHECK_THROWS_AS(reduce_bisection_to_etw({Multigraph(0), 1}), PreconditionError);
}

TEST_CASE("min bisection examples") {
  CHECK(min_bisection_exact(generate(FamilyId::cycle, 4)).value == 2);
  const Multigraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(min_bisection_exact(k4).value == 4);
  const BisectionResult r = min_bisection_exact(kTwoEdges);
  CHECK(r.value == 0);
  CHECK(r.side == std::vector<Vertex>{0, 1});
  CHECK(min_bisection_exact(Multigraph(0)).value == 0);
  CHECK(min_bisection_exact(Multigraph(1)).value == 0);
  CHECK_THROWS_AS(min_bisection_exact(Multigraph(21)), LimitExceeded);
}

TEST_CASE("min bisection agrees with a complement sweep") {
  std::mt19937 rng(61);
  for (int round = 0; round < 300; ++round) {
    const int n = etw::testing::uniform(rng, 0, 10);
    const Multigraph g = etw::testing::random_multigraph(rng, n, 3, 0.4);
    const BisectionResult r = min_bisection_exact(g);
    CHECK(r.value == complement_sweep(g));
    CHECK(static_cast<int>(r.side.size()) == n / 2);
  }
}

TEST_CASE("witness layout shape") {
  const Layout l = reduction_witness_layout(generate(FamilyId::cycle, 4), {0, 1});
  REQUIRE(l.size() == 20);
  CHECK(l[0] == 0);
  CHECK(l[1] == 1);
  CHECK(l[2] == 4);
  CHECK(l[17] == 19);
  CHECK(l[18] == 2);
  CHECK(l[19] == 3);
}

TEST_CASE("reduction checks on tiny instances") {
  const ReductionCheck yes = verify_reduction({generate(FamilyId::cycle, 4), 2});
  CHECK(yes.bisection_yes);
  CHECK(yes.etw_yes);
  CHECK(yes.agree());
  REQUIRE(yes.witness_cost.has_value());
  CHECK(*yes.witness_cost <= 34);

  const ReductionCheck no = verify_reduction({generate(FamilyId::cycle, 4), 1}, {}, yes.etw_h);
  CHECK_FALSE(no.bisection_yes);
  CHECK_FALSE(no.etw_yes);
  CHECK(no.agree());

  const ReductionCheck c2 = verify_reduction({generate(FamilyId::cycle, 2), 0});
  CHECK(c2.w == 4);
  CHECK(c2.agree());
  CHECK_THROWS_AS(verify_reduction({generate(FamilyId::cycle, 6), 0}), LimitExceeded);
}
