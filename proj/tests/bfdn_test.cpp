// Copyright 2026 The cotex authors
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

#include <doctest.h>

#include <cmath>

#include "cotex/audit.hpp"
#include "cotex/bfdn.hpp"
#include "cotex/bounds.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"

using namespace cotex;

TEST_CASE("round one on a star: both robots take distinct dangling edges") {
  World star = build_tree({{0, 1}, {0, 2}});
  ExplorationView view(star);
  view.reveal_root();
  BfdnUnit unit({0, 0, -1, false, {0, 1}});
  std::vector<NodeId> positions{0, 0};
  unit.begin(view, positions);
  RoundContext ctx(1, view, positions, ~0ull);
  unit.select(ctx);
  CHECK(ctx.selection(0).kind == Selection::Kind::edge);
  CHECK(ctx.selection(1).kind == Selection::Kind::edge);
  CHECK(ctx.selection(0).edge != ctx.selection(1).edge);
  CHECK(unit.anchor_of(0) == 0);
  CHECK(unit.anchor_of(1) == 0);
}

TEST_CASE("stack discipline: an anchored robot walks the stacked path down") {
  // Path 0-1-2 explored, one dangling edge below 2: the robot at the root is
  // anchored at 2 and spends two rounds on breadth-first moves.
  World w = build_tree({{0, 1}, {1, 2}, {2, 3}});
  ExplorationView view(w);
  view.reveal_root();
  view.arrive(1, w.parent_edge[1]);
  view.arrive(2, w.parent_edge[2]);
  BfdnUnit unit({0, 0, -1, false, {0}});
  std::vector<NodeId> positions{0};
  unit.begin(view, positions);

  RoundContext r1(1, view, positions, ~0ull);
  unit.select(r1);
  CHECK(unit.anchor_of(0) == 2);
  CHECK(r1.selection(0).edge == w.parent_edge[1]);
  CHECK(unit.stack_of(0).size() == 1);

  positions[0] = 1;
  RoundContext r2(2, view, positions, ~0ull);
  unit.select(r2);
  CHECK(r2.selection(0).edge == w.parent_edge[2]);
  CHECK(unit.stack_of(0).empty());
}

TEST_CASE("depth-next else-branch climbs toward the root") {
  World w = build_tree({{0, 1}, {1, 2}});
  ExplorationView view(w);
  view.reveal_root();
  view.arrive(1, w.parent_edge[1]);
  view.arrive(2, w.parent_edge[2]);  // fully explored
  BfdnUnit unit({0, 0, -1, false, {0}});
  std::vector<NodeId> positions{2};
  unit.begin(view, positions);
  RoundContext ctx(1, view, positions, ~0ull);
  unit.select(ctx);
  CHECK(ctx.selection(0).kind == Selection::Kind::up);
}

TEST_CASE("reanchor choices") {
  World w = build_tree({{0, 1}, {0, 2}, {1, 3}, {2, 4}});
  ExplorationView view(w);
  view.reveal_root();
  view.arrive(1, w.parent_edge[1]);
  view.arrive(2, w.parent_edge[2]);
  // Open nodes now: 1 and 2 at depth 1.
  BfdnUnit unit({0, 0, -1, false, {0, 1, 2}});
  std::vector<NodeId> positions{0, 0, 0};
  unit.begin(view, positions);

  SUBCASE("argmin by current anchor load") {
    unit.set_anchor_for_test(0, 1);
    unit.set_anchor_for_test(1, 1);
    CHECK(unit.reanchor_choice(2) == 2);
  }
  SUBCASE("ties break to the smallest node id") {
    CHECK(unit.reanchor_choice(0) == 1);
  }
  SUBCASE("singleton candidate set") {
    view.arrive(3, w.parent_edge[3]);  // node 1 closes, node 2 stays open
    BfdnUnit fresh({0, 0, -1, false, {0}});
    fresh.begin(view, positions);
    CHECK(fresh.reanchor_choice(0) == 2);
  }
}

TEST_CASE("no dangling edges anywhere: reanchor falls back to the root") {
  World w = build_tree({{0, 1}});
  ExplorationView view(w);
  view.reveal_root();
  view.arrive(1, w.parent_edge[1]);
  BfdnUnit unit({0, 0, -1, false, {0}});
  std::vector<NodeId> positions{0};
  unit.begin(view, positions);
  CHECK(unit.reanchor_choice(0) == kNoNode);  // empty candidate set: stays home
}

TEST_CASE("reanchor histogram: star needs no deep anchors") {
  World star = build_tree({{0, 1}, {0, 2}, {0, 3}});
  BfdnAlgorithm bfdn;
  RunTrace trace = run(star, bfdn, 3);
  CHECK(trace.summary.reanchors_by_depth.empty());
}

TEST_CASE("reanchor histogram bound on a spider") {
  World spider = gen_spider(4, 10);
  BfdnAlgorithm bfdn;
  RunTrace trace = run(spider, bfdn, 4);
  const double cap = reanchor_depth_bound(4, spider.max_degree());
  CHECK(cap == doctest::Approx(4 * (std::log(4.0) + 2)));
  for (const auto& [depth, count] : trace.summary.reanchors_by_depth) {
    CHECK(static_cast<double>(count) <= cap);
  }
  CHECK(audit_trace(trace, spider).ok());
}

TEST_CASE("single robot reanchors stay within k(0+2)=2 per depth") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    World tree = gen_random_tree(150, seed);
    BfdnAlgorithm bfdn;
    RunTrace trace = run(tree, bfdn, 1);
    for (const auto& [depth, count] : trace.summary.reanchors_by_depth) CHECK(count <= 2);
  }
}

TEST_CASE("dangling coverage and exclusive hosting hold every round") {
  for (auto [n, k, seed] : {std::tuple{60, 3, 1ull}, {200, 6, 2ull}, {400, 9, 3ull}}) {
    World tree = gen_random_tree(n, seed);
    BfdnAlgorithm bfdn;
    RunOptions opts;
    opts.round_hook = [&](const RoundInfo& info) {
      AnchorReport rep = bfdn.anchor_report();
      for (const auto& msg : check_dangling_coverage(info.view, rep)) {
        FAIL_CHECK(msg);
      }
      for (const auto& msg : check_exclusive_host(info.view, rep, info.positions)) {
        FAIL_CHECK(msg);
      }
    };
    RunTrace trace = run(tree, bfdn, k, opts);
    CHECK(trace.summary.complete);
  }
}

TEST_CASE("theorem-style runtime bound holds on mixed instances") {
  for (auto [gen, k] : {std::pair<World, int>{gen_random_tree(2000, 5), 8},
                        {gen_spider(8, 24), 8},
                        {gen_complete_tree(3, 6), 16}}) {
    BfdnAlgorithm bfdn;
    RunTrace trace = run(gen, bfdn, k);
    const double bound = bfdn_bound(gen.node_count(), gen.depth(), gen.max_degree(), k);
    CHECK(static_cast<double>(trace.summary.runtime) <= std::ceil(bound));
    CHECK(audit_trace(trace, gen).ok());
  }
}
