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

#include "cotex/audit.hpp"

#include <map>
#include <sstream>

#include "cotex/bounds.hpp"

namespace cotex {

std::string AuditReport::to_string() const {
  if (violations.empty()) return "audit: ok";
  std::ostringstream out;
  out << "audit: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) out << "  [" << v.check << "] " << v.detail << "\n";
  return out.str();
}

AuditReport audit_trace(const RunTrace& trace, const World& world) {
  AuditReport report;
  const auto& sum = trace.summary;
  auto fail = [&](const std::string& check, const std::string& detail) {
    report.violations.push_back({check, detail});
  };

  if (sum.hit_round_limit) fail("round-limit", "run did not terminate within the limit");

  // Idle rounds: only rounds where something moved count (the final stand-
  // still round that ends the loop is the termination signal, not a step).
  long long idle_rounds = 0;
  for (const auto& r : trace.rounds) {
    if (r.moves.empty() || r.idle.empty()) continue;
    if (!sum.full_mobility && sum.completion_round >= 0 && r.round > sum.completion_round)
      continue;
    ++idle_rounds;
  }
  report.idle_rounds = idle_rounds;
  if (idle_rounds > sum.depth + 1) {
    fail("idle-rounds", std::to_string(idle_rounds) + " idle rounds > D+1 = " +
                            std::to_string(sum.depth + 1));
  }

  std::map<EdgeId, int> first_crossings;
  for (const auto& r : trace.rounds) {
    for (const auto& mv : r.moves) {
      if (mv.was_dangling) ++first_crossings[mv.edge];
    }
  }
  for (const auto& [edge, count] : first_crossings) {
    if (count > 1)
      fail("unique-first-traversal",
           "edge " + std::to_string(edge) + " first-crossed " + std::to_string(count) + " times");
  }

  if (sum.excursions_tracked) {
    for (const auto& ex : sum.excursions) {
      const long long slack = ex.moves - 2ll * ex.anchor_depth;
      if (slack < 0 || slack % 2 != 0 || ex.dangling_explored != slack / 2) {
        fail("excursion-balance",
             "robot " + std::to_string(ex.robot) + ": depth " + std::to_string(ex.anchor_depth) +
                 ", " + std::to_string(ex.moves) + " moves, " +
                 std::to_string(ex.dangling_explored) + " dangling explored");
      }
    }
  }

  if (sum.full_mobility && sum.finishes_at_root && sum.complete) {
    for (int i = 0; i < sum.k; ++i) {
      if (sum.final_positions[i] != world.root)
        fail("return-to-root", "robot " + std::to_string(i) + " ended at node " +
                                   std::to_string(sum.final_positions[i]));
    }
  }
  if (sum.full_mobility && !sum.complete)
    fail("completion", "run stopped with dangling edges left");

  if (sum.tree && sum.edge_events > 2 * (sum.nodes - 1)) {
    fail("edge-events", std::to_string(sum.edge_events) + " events > 2(n-1)");
  }

  if (sum.full_mobility) {
    long long moves = 0, idle_slots = 0;
    for (const auto& r : trace.rounds) {
      if (r.moves.empty()) continue;
      moves += static_cast<long long>(r.moves.size());
      idle_slots += static_cast<long long>(r.idle.size());
    }
    if (moves + idle_slots != static_cast<long long>(sum.k) * sum.runtime) {
      fail("conservation", "moves " + std::to_string(moves) + " + idle " +
                               std::to_string(idle_slots) + " != k * runtime");
    }
  }

  const double cap = reanchor_depth_bound(sum.k, sum.max_degree);
  for (const auto& [depth, count] : sum.reanchors_by_depth) {
    if (static_cast<double>(count) > cap) {
      fail("reanchor-depth-cap", "depth " + std::to_string(depth) + ": " +
                                     std::to_string(count) + " reassignments > " +
                                     std::to_string(cap));
    }
  }

  for (const auto& [edge, count] : sum.closed_traversals) {
    if (count > 2)
      fail("closed-edge-crossings",
           "edge " + std::to_string(edge) + " crossed " + std::to_string(count) + " times");
  }

  return report;
}

std::vector<std::string> check_dangling_coverage(const ExplorationView& view,
                                                 const AnchorReport& anchors) {
  std::vector<std::string> out;
  std::vector<char> covered(view.world().node_count(), 0);
  std::vector<char> is_anchor(view.world().node_count(), 0);
  for (std::size_t i = 0; i < anchors.anchor.size(); ++i) {
    if (anchors.active[i] && anchors.anchor[i] != kNoNode) is_anchor[anchors.anchor[i]] = 1;
  }
  for (NodeId v : view.discovered_nodes()) {
    const NodeId p = view.parent_of(v);
    covered[v] = is_anchor[v] || (p != kNoNode && covered[p]);
  }
  for (const auto& [depth, nodes] : view.open_by_depth()) {
    for (NodeId v : nodes) {
      if (!covered[v])
        out.push_back("open node " + std::to_string(v) + " outside every active anchor subtree");
    }
  }
  return out;
}

std::vector<std::string> check_exclusive_host(const ExplorationView& view,
                                              const AnchorReport& anchors,
                                              const std::vector<NodeId>& positions) {
  std::vector<std::string> out;
  int max_anchor_depth = -1;
  for (std::size_t i = 0; i < anchors.anchor.size(); ++i) {
    if (anchors.active[i] && anchors.anchor[i] != kNoNode)
      max_anchor_depth = std::max(max_anchor_depth, view.depth_of(anchors.anchor[i]));
  }
  const int n = view.world().node_count();
  std::vector<int> open_below(n, 0), robots_below(n, 0);
  for (NodeId u : positions) {
    if (u >= 0 && view.discovered(u)) ++robots_below[u];
  }
  const auto& order = view.discovered_nodes();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    if (view.node_open(v)) ++open_below[v];
    const NodeId p = view.parent_of(v);
    if (p != kNoNode) {
      open_below[p] += open_below[v];
      robots_below[p] += robots_below[v];
    }
  }
  for (NodeId v : order) {
    if (view.depth_of(v) <= max_anchor_depth) continue;
    if (open_below[v] > 0 && robots_below[v] != 1) {
      out.push_back("node " + std::to_string(v) + " at depth " +
                    std::to_string(view.depth_of(v)) + " has an unfinished subtree hosting " +
                    std::to_string(robots_below[v]) + " robots");
    }
  }
  return out;
}

}  // namespace cotex
