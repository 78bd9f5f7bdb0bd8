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

#include "cotex/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace cotex {

World gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_tree: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (int i = 1; i < n; ++i) {
    const NodeId parent = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(i));
    edges.push_back({parent, i});
  }
  return build_tree(edges);
}

World gen_spider(int legs, int depth) {
  if (legs < 1 || depth < 1) throw std::invalid_argument("gen_spider: legs, depth >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId next = 1;
  for (int leg = 0; leg < legs; ++leg) {
    NodeId prev = 0;
    for (int d = 0; d < depth; ++d) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return build_tree(edges);
}

World gen_complete_tree(int branching, int depth) {
  if (branching < 1 || depth < 0)
    throw std::invalid_argument("gen_complete_tree: branching >= 1, depth >= 0");
  long long n = 1, layer = 1;
  for (int d = 0; d < depth; ++d) {
    layer *= branching;
    n += layer;
    if (n > 10'000'000) throw std::invalid_argument("gen_complete_tree: more than 1e7 nodes");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  // Children of node v are assigned consecutively in breadth-first order.
  NodeId next = 1;
  for (NodeId v = 0; next < n; ++v) {
    for (int b = 0; b < branching && next < n; ++b) edges.push_back({v, next++});
  }
  return build_tree(edges);
}

GridWorld gen_grid_with_obstacles(int width, int height, const std::vector<Rect>& obstacles) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("gen_grid_with_obstacles: empty board");
  GridWorld grid;
  grid.width = width;
  grid.height = height;
  grid.cell_id.assign(static_cast<std::size_t>(width) * height, kNoNode);

  auto blocked = [&](int x, int y) {
    for (const auto& r : obstacles) {
      if (r.contains(x, y)) return true;
    }
    return false;
  };
  if (blocked(0, 0))
    throw std::invalid_argument("gen_grid_with_obstacles: origin inside an obstacle");

  NodeId next = 0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (!blocked(x, y)) grid.cell_id[y * width + x] = next++;
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const NodeId a = grid.id_at(x, y);
      if (a == kNoNode) continue;
      if (x + 1 < width && grid.id_at(x + 1, y) != kNoNode)
        edges.push_back({a, grid.id_at(x + 1, y)});
      if (y + 1 < height && grid.id_at(x, y + 1) != kNoNode)
        edges.push_back({a, grid.id_at(x, y + 1)});
    }
  }
  World w = build_graph(next, edges, 0);  // throws on a disconnected free region
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const NodeId a = grid.id_at(x, y);
      if (a == kNoNode) continue;
      if (w.dist[a] != x + y)
        throw std::invalid_argument(
            "gen_grid_with_obstacles: distance of cell (" + std::to_string(x) + "," +
            std::to_string(y) + ") is " + std::to_string(w.dist[a]) +
            ", not the Manhattan value " + std::to_string(x + y));
    }
  }
  grid.world = std::move(w);
  return grid;
}

GridWorld gen_random_grid(int width, int height, int max_obstacles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rect> obstacles;
    const int count = max_obstacles > 0 ? static_cast<int>(rng() % (max_obstacles + 1)) : 0;
    for (int i = 0; i < count; ++i) {
      Rect r;
      r.x1 = static_cast<int>(rng() % width);
      r.y1 = static_cast<int>(rng() % height);
      r.x2 = std::min<int>(width - 1, r.x1 + static_cast<int>(rng() % std::max(1, width / 3)));
      r.y2 = std::min<int>(height - 1, r.y1 + static_cast<int>(rng() % std::max(1, height / 3)));
      obstacles.push_back(r);
    }
    try {
      return gen_grid_with_obstacles(width, height, obstacles);
    } catch (const std::invalid_argument&) {
      continue;  // resample
    }
  }
  throw std::runtime_error("gen_random_grid: no valid layout found");
}

}  // namespace cotex
