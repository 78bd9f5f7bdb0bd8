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

#ifndef COTEX_GRAPH_EXPLORE_HPP_
#define COTEX_GRAPH_EXPLORE_HPP_

#include <string>
#include <vector>

#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

struct GraphRunReport {
  RunTrace trace;
  double runtime_bound = 0.0;  // 2m/k + D^2(min(ln Delta, ln k)+2), D = radius
  bool bound_ok = false;
  bool complete = false;
  int closed_edges = 0;
  bool closed_crossings_ok = false;  // every closed edge crossed at most twice
  bool surviving_is_bfs_tree = false;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Runs the exploration on a graph with a distance oracle: a robot crossing
/// a fresh edge into an already discovered or not strictly farther node
/// backtracks and the edge closes for good. Verifies that the never-closed
/// edges form a breadth-first spanning tree of the graph.
GraphRunReport run_graph_bfdn(const World& graph, int k);

}  // namespace cotex

#endif  // COTEX_GRAPH_EXPLORE_HPP_
