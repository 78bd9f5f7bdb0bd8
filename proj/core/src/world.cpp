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

#include "cotex/world.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cotex {

int World::depth() const {
  int d = 0;
  for (int x : dist) d = std::max(d, x);
  return d;
}

int World::max_degree() const {
  int d = 0;
  for (const auto& p : ports) d = std::max<int>(d, static_cast<int>(p.size()));
  return d;
}

int World::port_of(NodeId v, EdgeId e) const {
  const auto& pv = ports[v];
  for (int i = 0; i < static_cast<int>(pv.size()); ++i) {
    if (pv[i] == e) return i + 1;
  }
  throw std::logic_error("port_of: edge " + std::to_string(e) +
                         " not incident to node " + std::to_string(v));
}

World build_tree(const std::vector<std::pair<NodeId, NodeId>>& edges) {
  const int n = static_cast<int>(edges.size()) + 1;
  World w;
  w.kind = World::Kind::tree;
  w.parent.assign(n, kNoNode);
  w.parent_edge.assign(n, kNoEdge);
  w.ports.assign(n, {});
  w.edge_nodes.assign(n - 1, {kNoNode, kNoNode});

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [p, c] : edges) {
    if (p < 0 || c < 0 || p >= n || c >= n)
      throw std::invalid_argument("build_tree: node id out of range (ids must be dense)");
    if (c == 0) throw std::invalid_argument("build_tree: cycle detected (edge into the root)");
    auto key = std::minmax(p, c);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("build_tree: duplicate edge");
    if (w.parent[c] != kNoNode)
      throw std::invalid_argument("build_tree: cycle detected (node " +
                                  std::to_string(c) + " has two parents)");
    w.parent[c] = p;
    w.parent_edge[c] = c - 1;  // dense edge ids, one per non-root node
    w.edge_nodes[c - 1] = {p, c};
  }

  // Depths; walking to the root also catches cycles and disconnection.
  w.dist.assign(n, -1);
  w.dist[0] = 0;
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> chain;
    NodeId x = v;
    while (w.dist[x] < 0) {
      chain.push_back(x);
      if (w.parent[x] == kNoNode)
        throw std::invalid_argument("build_tree: disconnected input (node " +
                                    std::to_string(x) + " has no path to the root)");
      x = w.parent[x];
      if (static_cast<int>(chain.size()) > n)
        throw std::invalid_argument("build_tree: cycle detected");
    }
    int d = w.dist[x];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) w.dist[*it] = ++d;
  }

  // Ports: parent edge first, then child edges by ascending child id.
  for (NodeId v = 1; v < n; ++v) w.ports[v].push_back(w.parent_edge[v]);
  for (NodeId c = 1; c < n; ++c) w.ports[w.parent[c]].push_back(w.parent_edge[c]);
  return w;
}

namespace {

std::vector<int> bfs_distances(int node_count,
                               const std::vector<std::vector<EdgeId>>& ports,
                               const std::vector<std::array<NodeId, 2>>& edge_nodes,
                               NodeId origin) {
  std::vector<int> dist(node_count, -1);
  std::deque<NodeId> queue{origin};
  dist[origin] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (EdgeId e : ports[u]) {
      NodeId v = edge_nodes[e][0] == u ? edge_nodes[e][1] : edge_nodes[e][0];
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

World build_graph(int node_count,
                  const std::vector<std::pair<NodeId, NodeId>>& edges,
                  NodeId origin, const std::vector<int>* dist) {
  if (node_count <= 0) throw std::invalid_argument("build_graph: empty graph");
  if (origin < 0 || origin >= node_count)
    throw std::invalid_argument("build_graph: origin out of range");
  World w;
  w.kind = World::Kind::graph;
  w.root = origin;
  w.ports.assign(node_count, {});
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count || u == v)
      throw std::invalid_argument("build_graph: bad edge");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("build_graph: duplicate edge");
    EdgeId e = static_cast<EdgeId>(w.edge_nodes.size());
    w.edge_nodes.push_back({u, v});
    w.ports[u].push_back(e);
    w.ports[v].push_back(e);
  }

  std::vector<int> bfs = bfs_distances(node_count, w.ports, w.edge_nodes, origin);
  for (int d : bfs) {
    if (d < 0) throw std::invalid_argument("build_graph: disconnected input");
  }
  if (dist != nullptr) {
    if (static_cast<int>(dist->size()) != node_count)
      throw std::invalid_argument("build_graph: dist size mismatch");
    if ((*dist)[origin] != 0)
      throw std::invalid_argument("build_graph: dist(origin) must be 0");
    for (const auto& ab : w.edge_nodes) {
      if (std::abs((*dist)[ab[0]] - (*dist)[ab[1]]) > 1)
        throw std::invalid_argument("build_graph: dist differs by more than 1 across an edge");
    }
    w.dist = *dist;
  } else {
    w.dist = std::move(bfs);
  }
  return w;
}

World parse_world(std::istream& in) {
  std::string first;
  if (!std::getline(in, first)) throw std::invalid_argument("parse_world: empty input");
  std::istringstream head(first);
  std::vector<long long> nums;
  long long x;
  while (head >> x) nums.push_back(x);

  if (nums.size() == 1) {  // tree
    int n = static_cast<int>(nums[0]);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n - 1; ++i) {
      NodeId p, c;
      if (!(in >> p >> c)) throw std::invalid_argument("parse_world: truncated tree file");
      edges.push_back({p, c});
    }
    return build_tree(edges);
  }
  if (nums.size() == 3) {  // graph
    int n = static_cast<int>(nums[0]);
    int m = static_cast<int>(nums[1]);
    NodeId origin = static_cast<NodeId>(nums[2]);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
      NodeId u, v;
      if (!(in >> u >> v)) throw std::invalid_argument("parse_world: truncated graph file");
      edges.push_back({u, v});
    }
    std::string tag;
    if (in >> tag && tag == "dist") {
      std::vector<int> dist(n);
      for (int i = 0; i < n; ++i) {
        if (!(in >> dist[i])) throw std::invalid_argument("parse_world: truncated dist block");
      }
      return build_graph(n, edges, origin, &dist);
    }
    return build_graph(n, edges, origin);
  }
  throw std::invalid_argument("parse_world: unrecognized header line");
}

void write_world(const World& w, std::ostream& out) {
  if (w.is_tree()) {
    out << w.node_count() << "\n";
    for (NodeId v = 1; v < w.node_count(); ++v)
      out << w.parent[v] << " " << v << "\n";
  } else {
    out << w.node_count() << " " << w.edge_count() << " " << w.root << "\n";
    for (const auto& ab : w.edge_nodes) out << ab[0] << " " << ab[1] << "\n";
    out << "dist";
    for (int d : w.dist) out << " " << d;
    out << "\n";
  }
}

World load_world(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_world(in);
}

void save_world(const World& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_world(w, out);
}

}  // namespace cotex
