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

#ifndef COTEX_VIEW_HPP_
#define COTEX_VIEW_HPP_

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cotex/world.hpp"

namespace cotex {

enum class EdgeStatus : unsigned char { undiscovered, dangling, traversed, closed };

/// The partially explored structure shared by all robots: discovered nodes
/// and edges, edge statuses, discovery-tree parents and per-depth index of
/// open nodes (nodes with at least one incident dangling edge). Mutation is
/// driven by the engine; algorithms only query.
class ExplorationView {
 public:
  explicit ExplorationView(const World& world);

  const World& world() const { return *world_; }
  NodeId root() const { return world_->root; }

  bool discovered(NodeId v) const { return depth_[v] >= 0; }
  int depth_of(NodeId v) const;
  NodeId parent_of(NodeId v) const { return parent_[v]; }
  EdgeId parent_edge_of(NodeId v) const { return parent_edge_[v]; }
  const std::vector<NodeId>& children_of(NodeId v) const { return children_[v]; }

  /// Incident edges of a discovered node, in port order. All of them are
  /// discovered: edges are revealed when one endpoint is first occupied.
  const std::vector<EdgeId>& ports_of(NodeId v) const;

  EdgeStatus status(EdgeId e) const { return status_[e]; }
  bool dangling(EdgeId e) const { return status_[e] == EdgeStatus::dangling; }
  /// The endpoint from which a dangling edge was discovered.
  NodeId discovered_endpoint(EdgeId e) const { return known_end_[e]; }

  int open_degree(NodeId v) const { return open_degree_[v]; }
  bool node_open(NodeId v) const { return open_degree_[v] > 0; }

  int discovered_node_count() const { return static_cast<int>(discovery_order_.size()); }
  int discovered_edge_count() const { return discovered_edge_count_; }
  int traversed_edge_count() const { return traversed_count_; }
  int dangling_count() const { return dangling_count_; }
  int closed_count() const { return closed_count_; }
  bool fully_explored() const { return dangling_count_ == 0; }

  /// Discovered nodes in discovery order (root first).
  const std::vector<NodeId>& discovered_nodes() const { return discovery_order_; }

  /// Minimal depth with an open node, or -1 if none.
  int min_open_depth() const;
  const std::map<int, std::set<NodeId>>& open_by_depth() const { return open_by_depth_; }

  /// All dangling edges whose discovered endpoint has depth d, in ascending
  /// (node id, port) order. In graphs an edge discovered from both sides is
  /// listed under each endpoint at the matching depth.
  std::vector<std::pair<NodeId, EdgeId>> dangling_edges_at_depth(int d) const;

  /// Ports of v through which some robot has come back up into v.
  const std::vector<bool>& finished_ports(NodeId v) const;

  // --- engine-side mutation ---

  /// Discovers the root and reveals its incident edges.
  std::vector<EdgeId> reveal_root();
  /// Robot arrived at `node` by crossing `via` (previously dangling): marks
  /// it traversed, discovers the node if new, reveals its incident edges.
  /// Returns the newly discovered edges (excluding `via`).
  std::vector<EdgeId> arrive(NodeId node, EdgeId via);
  /// Graph variant: a crossed edge is abandoned instead of adopted.
  void close(EdgeId e);
  void mark_finished_port(NodeId v, int port);

 private:
  void set_open_degree(NodeId v, int value);

  const World* world_;
  std::vector<EdgeStatus> status_;
  std::vector<NodeId> known_end_;    // dangling edges: discovered endpoint
  std::vector<int> depth_;           // -1 while undiscovered
  std::vector<NodeId> parent_;       // discovery tree
  std::vector<EdgeId> parent_edge_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> open_degree_;
  std::vector<NodeId> discovery_order_;
  std::map<int, std::set<NodeId>> open_by_depth_;
  std::vector<std::vector<bool>> finished_ports_;
  int discovered_edge_count_ = 0;
  int dangling_count_ = 0;
  int traversed_count_ = 0;
  int closed_count_ = 0;
};

/// Reveals `node` in the view: every incident edge becomes discovered, the
/// edge the robot just crossed becomes traversed, the node depth is recorded.
/// A no-op when the node is already discovered. Throws when the node is
/// neither the root nor adjacent to a discovered dangling edge.
void reveal(ExplorationView& view, NodeId node);

}  // namespace cotex

#endif  // COTEX_VIEW_HPP_
