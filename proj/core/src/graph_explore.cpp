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

#include "cotex/graph_explore.hpp"

#include <cmath>

#include "cotex/bfdn.hpp"
#include "cotex/bounds.hpp"
#include "cotex/engine.hpp"

namespace cotex {

GraphRunReport run_graph_bfdn(const World& graph, int k) {
  GraphRunReport report;
  BfdnAlgorithm algo;
  report.trace = run(graph, algo, k);
  const auto& sum = report.trace.summary;

  report.runtime_bound = bfdn_bound(graph.edge_count(), graph.depth(), graph.max_degree(), k);
  report.bound_ok = static_cast<double>(sum.runtime) <= std::ceil(report.runtime_bound);
  if (!report.bound_ok) {
    report.problems.push_back("runtime " + std::to_string(sum.runtime) + " over the bound " +
                              std::to_string(report.runtime_bound));
  }
  report.complete = sum.complete;
  if (!report.complete) report.problems.push_back("exploration did not finish");

  report.closed_edges = static_cast<int>(sum.closed_traversals.size());
  report.closed_crossings_ok = true;
  for (const auto& [edge, count] : sum.closed_traversals) {
    if (count > 2) {
      report.closed_crossings_ok = false;
      report.problems.push_back("closed edge " + std::to_string(edge) + " crossed " +
                                std::to_string(count) + " times");
    }
  }

  // The surviving (adopted) edges must form a spanning tree in which every
  // node hangs below a neighbor one unit closer to the origin.
  std::vector<NodeId> tree_parent(graph.node_count(), kNoNode);
  int adopted = 0;
  bool shape_ok = true;
  for (const auto& round : report.trace.rounds) {
    for (const auto& mv : round.moves) {
      if (!mv.was_dangling || sum.closed_traversals.count(mv.edge)) continue;
      ++adopted;
      if (tree_parent[mv.to] != kNoNode || mv.to == graph.root) {
        shape_ok = false;
        report.problems.push_back("node " + std::to_string(mv.to) + " adopted twice");
      } else {
        tree_parent[mv.to] = mv.from;
        if (graph.dist[mv.to] != graph.dist[mv.from] + 1) {
          shape_ok = false;
          report.problems.push_back("adopted edge " + std::to_string(mv.edge) +
                                    " does not step one unit away from the origin");
        }
      }
    }
  }
  if (adopted != graph.node_count() - 1) {
    shape_ok = false;
    report.problems.push_back("surviving edges: " + std::to_string(adopted) + ", expected " +
                              std::to_string(graph.node_count() - 1));
  }
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (v != graph.root && tree_parent[v] == kNoNode) {
      shape_ok = false;
      report.problems.push_back("node " + std::to_string(v) + " never adopted");
      break;
    }
  }
  report.surviving_is_bfs_tree = shape_ok;
  return report;
}

}  // namespace cotex
