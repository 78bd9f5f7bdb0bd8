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

#ifndef COTEX_BASELINES_HPP_
#define COTEX_BASELINES_HPP_

#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/engine.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// Classic single-robot depth-first search: take the lowest-port unexplored
/// edge if one is incident, climb otherwise.
class DfsAlgorithm : public ExplorationAlgorithm {
 public:
  std::string name() const override { return "dfs"; }
  void begin(const ExplorationView& view, int k) override;
  void select(RoundContext& ctx) override;
};

/// Runs DFS with one robot and checks the runtime is exactly 2(n-1).
/// Throws std::logic_error otherwise.
RunTrace single_dfs(const World& tree);

struct OfflineSchedule {
  std::vector<std::vector<NodeId>> walks;  // per robot, node sequences from/to root
  long long makespan = 0;                  // max walk length in moves
  long long lower_bound_floor = 0;         // max(ceil(2(n-1)/k), D)
};

/// Splits the doubled depth-first tour (children in ascending port order)
/// into k contiguous segments of at most ceil(2(n-1)/k) moves; robot i walks
/// to its segment, runs it and returns. Makespan <= 2(ceil((n-1)/k) + D).
OfflineSchedule offline_schedule(const World& tree, int k);

}  // namespace cotex

#endif  // COTEX_BASELINES_HPP_
