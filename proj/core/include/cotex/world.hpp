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

#ifndef COTEX_WORLD_HPP_
#define COTEX_WORLD_HPP_

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace cotex {

using NodeId = int;
using EdgeId = int;

inline constexpr NodeId kNoNode = -1;
inline constexpr EdgeId kNoEdge = -1;

/// The hidden structure that robots explore. Node and edge ids are dense
/// integers; the root/origin is always node 0. `ports[v]` lists the edges
/// incident to v in port order (1-based ports, so port p is ports[v][p-1]);
/// for non-root tree nodes port 1 is the edge to the parent.
struct World {
  enum class Kind { tree, graph };

  Kind kind = Kind::tree;
  NodeId root = 0;
  std::vector<std::array<NodeId, 2>> edge_nodes;  // edge id -> endpoints
  std::vector<std::vector<EdgeId>> ports;         // node id -> incident edges
  std::vector<int> dist;                          // distance to the root
  std::vector<NodeId> parent;                     // trees only; root -> kNoNode
  std::vector<EdgeId> parent_edge;                // trees only; root -> kNoEdge

  bool is_tree() const { return kind == Kind::tree; }
  int node_count() const { return static_cast<int>(ports.size()); }
  int edge_count() const { return static_cast<int>(edge_nodes.size()); }

  /// Tree depth, resp. graph radius (max distance to the origin).
  int depth() const;
  int max_degree() const;
  int degree(NodeId v) const { return static_cast<int>(ports[v].size()); }

  NodeId other_end(EdgeId e, NodeId u) const {
    const auto& ab = edge_nodes[e];
    return ab[0] == u ? ab[1] : ab[0];
  }

  /// 1-based port index of edge e at node v; throws if e is not incident.
  int port_of(NodeId v, EdgeId e) const;
};

/// Builds a rooted tree from (parent, child) pairs. Node 0 is the root. The
/// edge toward the parent gets port 1; sibling edges are ordered by ascending
/// child id. Edge ids are dense: the edge above node v has id v - 1.
/// Throws std::invalid_argument on duplicate edges, cycles or disconnected
/// input.
World build_tree(const std::vector<std::pair<NodeId, NodeId>>& edges);

/// Builds an undirected graph rooted at `origin`. Edge ids follow the input
/// order; ports at a node are ordered by ascending edge id. Distances default
/// to breadth-first distances from the origin; a caller-supplied vector is
/// validated against the edge structure (|dist(u) - dist(v)| <= 1, origin 0).
World build_graph(int node_count,
                  const std::vector<std::pair<NodeId, NodeId>>& edges,
                  NodeId origin = 0, const std::vector<int>* dist = nullptr);

/// Text formats. Trees: first line `n`, then n-1 lines `parent child`.
/// Graphs: first line `nodes m origin`, then m lines `u v`, then an optional
/// line `dist` followed by one distance per node (computed by BFS if absent).
World load_world(const std::string& path);
void save_world(const World& w, const std::string& path);

World parse_world(std::istream& in);
void write_world(const World& w, std::ostream& out);

}  // namespace cotex

#endif  // COTEX_WORLD_HPP_
