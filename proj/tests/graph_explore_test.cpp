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

#include "cotex/bfdn.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"
#include "cotex/graph_explore.hpp"

using namespace cotex;

TEST_CASE("a tree fed as a graph closes nothing") {
  World tree = gen_random_tree(100, 13);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& ab : tree.edge_nodes) edges.push_back({ab[0], ab[1]});
  World graph = build_graph(tree.node_count(), edges, 0);

  GraphRunReport report = run_graph_bfdn(graph, 4);
  CHECK(report.ok());
  CHECK(report.closed_edges == 0);

  BfdnAlgorithm plain;
  RunTrace reference = run(tree, plain, 4);
  CHECK(report.trace.summary.runtime == reference.summary.runtime);
}

TEST_CASE("four-cycle closes exactly one edge") {
  World cycle = build_graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  GraphRunReport report = run_graph_bfdn(cycle, 1);
  CHECK(report.ok());
  CHECK(report.closed_edges == 1);
  CHECK(report.surviving_is_bfs_tree);
  for (const auto& [edge, count] : report.trace.summary.closed_traversals) CHECK(count == 2);
}

TEST_CASE("5x5 grid: surviving edges form a 24-edge spanning tree") {
  GridWorld grid = gen_grid_with_obstacles(5, 5, {});
  GraphRunReport report = run_graph_bfdn(grid.world, 4);
  CHECK(report.ok());
  CHECK(grid.world.node_count() == 25);
  CHECK(grid.world.node_count() - 1 == 24);
  CHECK(report.surviving_is_bfs_tree);
  CHECK(report.bound_ok);
}

TEST_CASE("grid distances are Manhattan") {
  GridWorld g = gen_grid_with_obstacles(3, 3, {});
  CHECK(g.world.dist[g.id_at(2, 2)] == 4);

  GridWorld blocked = gen_grid_with_obstacles(5, 5, {Rect{1, 1, 1, 3}});
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) {
      const NodeId id = blocked.id_at(x, y);
      if (id != kNoNode) CHECK(blocked.world.dist[id] == x + y);
    }
  }
}

TEST_CASE("grid generation rejects broken layouts") {
  // Wall the corner cell off completely.
  CHECK_THROWS_AS(gen_grid_with_obstacles(3, 3, {Rect{0, 1, 1, 1}, Rect{1, 0, 1, 0}}),
                  std::invalid_argument);
  // An obstacle on the origin.
  CHECK_THROWS_AS(gen_grid_with_obstacles(3, 3, {Rect{0, 0, 0, 0}}), std::invalid_argument);
  // A detour configuration: going around this block breaks the Manhattan rule.
  CHECK_THROWS_AS(gen_grid_with_obstacles(5, 5, {Rect{0, 1, 3, 1}}), std::invalid_argument);
}

TEST_CASE("seeded random grids explore cleanly") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    GridWorld grid = gen_random_grid(12, 12, 4, seed);
    GraphRunReport report = run_graph_bfdn(grid.world, 4);
    CHECK(report.ok());
  }
}
