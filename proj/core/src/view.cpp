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

#include "cotex/view.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotex {

ExplorationView::ExplorationView(const World& world) : world_(&world) {
  const int n = world.node_count();
  status_.assign(world.edge_count(), EdgeStatus::undiscovered);
  known_end_.assign(world.edge_count(), kNoNode);
  depth_.assign(n, -1);
  parent_.assign(n, kNoNode);
  parent_edge_.assign(n, kNoEdge);
  children_.assign(n, {});
  open_degree_.assign(n, 0);
  finished_ports_.assign(n, {});
}

int ExplorationView::depth_of(NodeId v) const {
  if (depth_[v] < 0) throw std::logic_error("depth_of: node not discovered");
  return depth_[v];
}

const std::vector<EdgeId>& ExplorationView::ports_of(NodeId v) const {
  if (depth_[v] < 0) throw std::logic_error("ports_of: node not discovered");
  return world_->ports[v];
}

int ExplorationView::min_open_depth() const {
  return open_by_depth_.empty() ? -1 : open_by_depth_.begin()->first;
}

std::vector<std::pair<NodeId, EdgeId>> ExplorationView::dangling_edges_at_depth(int d) const {
  std::vector<std::pair<NodeId, EdgeId>> out;
  auto it = open_by_depth_.find(d);
  if (it == open_by_depth_.end()) return out;
  for (NodeId v : it->second) {
    for (EdgeId e : world_->ports[v]) {
      if (status_[e] == EdgeStatus::dangling) out.push_back({v, e});
    }
  }
  return out;
}

const std::vector<bool>& ExplorationView::finished_ports(NodeId v) const {
  if (depth_[v] < 0) throw std::logic_error("finished_ports: node not discovered");
  return finished_ports_[v];
}

void ExplorationView::set_open_degree(NodeId v, int value) {
  const int before = open_degree_[v];
  open_degree_[v] = value;
  if (before == 0 && value > 0) {
    open_by_depth_[depth_[v]].insert(v);
  } else if (before > 0 && value == 0) {
    auto it = open_by_depth_.find(depth_[v]);
    it->second.erase(v);
    if (it->second.empty()) open_by_depth_.erase(it);
  }
}

std::vector<EdgeId> ExplorationView::reveal_root() {
  const NodeId r = world_->root;
  if (discovered(r)) return {};
  depth_[r] = 0;
  discovery_order_.push_back(r);
  finished_ports_[r].assign(world_->degree(r) + 1, false);
  std::vector<EdgeId> fresh;
  int open = 0;
  for (EdgeId e : world_->ports[r]) {
    status_[e] = EdgeStatus::dangling;
    known_end_[e] = r;
    ++discovered_edge_count_;
    ++dangling_count_;
    ++open;
    fresh.push_back(e);
  }
  set_open_degree(r, open);
  return fresh;
}

std::vector<EdgeId> ExplorationView::arrive(NodeId node, EdgeId via) {
  if (status_[via] != EdgeStatus::dangling)
    throw std::logic_error("arrive: crossed edge is not dangling");
  // The crossed edge stops dangling at both of its (discovered) endpoints.
  status_[via] = EdgeStatus::traversed;
  --dangling_count_;
  ++traversed_count_;
  NodeId from = world_->other_end(via, node);
  set_open_degree(from, open_degree_[from] - 1);
  if (discovered(node)) {
    set_open_degree(node, open_degree_[node] - 1);
    return {};
  }

  depth_[node] = depth_[from] + 1;
  parent_[node] = from;
  parent_edge_[node] = via;
  children_[from].push_back(node);
  discovery_order_.push_back(node);
  finished_ports_[node].assign(world_->degree(node) + 1, false);

  std::vector<EdgeId> fresh;
  int open = 0;
  for (EdgeId e : world_->ports[node]) {
    if (e == via) continue;
    if (status_[e] == EdgeStatus::undiscovered) {
      status_[e] = EdgeStatus::dangling;
      known_end_[e] = node;
      ++discovered_edge_count_;
      ++dangling_count_;
      ++open;
      fresh.push_back(e);
    } else if (status_[e] == EdgeStatus::dangling) {
      // Graph case: the edge was already visible from its other side and now
      // dangles at this node too.
      ++open;
    }
  }
  set_open_degree(node, open);
  return fresh;
}

void ExplorationView::close(EdgeId e) {
  if (status_[e] != EdgeStatus::dangling)
    throw std::logic_error("close: edge is not dangling");
  status_[e] = EdgeStatus::closed;
  --dangling_count_;
  ++closed_count_;
  for (NodeId v : world_->edge_nodes[e]) {
    if (discovered(v)) set_open_degree(v, open_degree_[v] - 1);
  }
}

void ExplorationView::mark_finished_port(NodeId v, int port) {
  finished_ports_[v][port] = true;
}

void reveal(ExplorationView& view, NodeId node) {
  if (view.discovered(node)) return;
  if (node == view.root()) {
    view.reveal_root();
    return;
  }
  // The edge just traversed: the unique discovered dangling edge into `node`
  // (lowest edge id when a graph offers several).
  const World& w = view.world();
  for (EdgeId e : w.ports[node]) {
    if (view.status(e) == EdgeStatus::dangling && view.discovered(w.other_end(e, node))) {
      view.arrive(node, e);
      return;
    }
  }
  throw std::invalid_argument("reveal: node not adjacent to any discovered edge");
}

}  // namespace cotex
