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

#include "cotex/baselines.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotex {

void DfsAlgorithm::begin(const ExplorationView&, int k) {
  if (k != 1) throw std::invalid_argument("dfs runs with a single robot");
}

void DfsAlgorithm::select(RoundContext& ctx) {
  if (!ctx.movable(0)) return;
  const ExplorationView& view = ctx.view();
  const NodeId u = ctx.positions()[0];
  for (EdgeId e : view.ports_of(u)) {
    if (view.dangling(e)) {
      ctx.select_edge(0, e);
      return;
    }
  }
  if (u != view.root()) ctx.select_up(0);
}

RunTrace single_dfs(const World& tree) {
  DfsAlgorithm dfs;
  RunTrace trace = run(tree, dfs, 1);
  const long long expected = 2ll * (tree.node_count() - 1);
  if (trace.summary.runtime != expected) {
    throw std::logic_error("dfs runtime " + std::to_string(trace.summary.runtime) +
                           " != 2(n-1) = " + std::to_string(expected));
  }
  return trace;
}

namespace {

// Doubled depth-first tour as a node sequence, children in port order.
std::vector<NodeId> euler_tour(const World& tree) {
  std::vector<NodeId> tour{tree.root};
  // Iterative DFS keeping per-node port cursor.
  std::vector<std::size_t> cursor(tree.node_count(), 0);
  NodeId u = tree.root;
  while (true) {
    bool descended = false;
    while (cursor[u] < tree.ports[u].size()) {
      const EdgeId e = tree.ports[u][cursor[u]++];
      const NodeId v = tree.other_end(e, u);
      if (v == tree.parent[u]) continue;
      tour.push_back(v);
      u = v;
      descended = true;
      break;
    }
    if (descended) continue;
    if (u == tree.root) break;
    u = tree.parent[u];
    tour.push_back(u);
  }
  return tour;
}

}  // namespace

OfflineSchedule offline_schedule(const World& tree, int k) {
  if (!tree.is_tree()) throw std::invalid_argument("offline_schedule expects a tree");
  const long long n = tree.node_count();
  OfflineSchedule sched;
  sched.walks.assign(k, {});
  const long long steps = 2 * (n - 1);
  sched.lower_bound_floor = std::max((steps + k - 1) / k, static_cast<long long>(tree.depth()));
  if (n == 1) return sched;

  const std::vector<NodeId> tour = euler_tour(tree);
  const long long seg = (steps + k - 1) / k;  // moves per robot, rounded up

  auto path_from_root = [&](NodeId v) {
    std::vector<NodeId> path{v};
    while (path.back() != tree.root) path.push_back(tree.parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (int i = 0; i < k; ++i) {
    const long long begin = std::min<long long>(static_cast<long long>(i) * seg, steps);
    const long long end = std::min<long long>(begin + seg, steps);
    auto& walk = sched.walks[i];
    if (begin >= end) {
      walk = {tree.root};
      continue;
    }
    walk = path_from_root(tour[begin]);
    for (long long s = begin + 1; s <= end; ++s) walk.push_back(tour[s]);
    auto back = path_from_root(tour[end]);
    for (auto it = back.rbegin() + 1; it != back.rend(); ++it) walk.push_back(*it);
    sched.makespan = std::max(sched.makespan, static_cast<long long>(walk.size()) - 1);
  }
  return sched;
}

}  // namespace cotex
