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

#ifndef COTEX_GENERATORS_HPP_
#define COTEX_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "cotex/world.hpp"

namespace cotex {

/// Uniform random recursive tree: node i hangs below a parent drawn
/// uniformly from {0..i-1}. Bit-reproducible across platforms (mt19937_64
/// with modulo reduction).
World gen_random_tree(int n, std::uint64_t seed);

/// `legs` disjoint paths of length `depth` glued at the root:
/// n = legs*depth + 1 nodes.
World gen_spider(int legs, int depth);

/// Complete b-ary tree; refuses more than 10^7 nodes.
World gen_complete_tree(int branching, int depth);

struct Rect {
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // inclusive corners
  bool contains(int x, int y) const {
    return x >= x1 && x <= x2 && y >= y1 && y <= y2;
  }
};

struct GridWorld {
  World world;
  int width = 0, height = 0;
  std::vector<NodeId> cell_id;  // y*width + x -> node id, kNoNode if blocked
  NodeId id_at(int x, int y) const { return cell_id[y * width + x]; }
};

/// Grid graph on the free cells of a width x height board minus the given
/// rectangular obstacles, origin (0,0). Rejects layouts where the free region
/// is disconnected or some free cell's graph distance differs from x+y.
GridWorld gen_grid_with_obstacles(int width, int height, const std::vector<Rect>& obstacles);

/// Samples up to `max_obstacles` random rectangles until the layout passes
/// the checks above.
GridWorld gen_random_grid(int width, int height, int max_obstacles, std::uint64_t seed);

}  // namespace cotex

#endif  // COTEX_GENERATORS_HPP_
