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

#ifndef COTEX_TRACE_HPP_
#define COTEX_TRACE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cotex/world.hpp"

namespace cotex {

enum class TracePhase : signed char { none = -1, shallow = 0, deep = 1, rebalance = 2 };

struct MoveRecord {
  int robot = 0;
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  EdgeId edge = kNoEdge;
  bool was_dangling = false;  // first traversal of a dangling edge
  bool edge_event = false;    // first down or first up traversal of a tree edge
};

struct AnchorEvent {
  int robot = 0;
  NodeId node = kNoNode;
  int depth = 0;
};

struct RoundRecord {
  long long round = 0;  // 1-based
  std::uint64_t movable = 0;
  std::vector<MoveRecord> moves;
  std::vector<EdgeId> discovered;
  std::vector<int> idle;  // movable robots that did not change position
  std::vector<AnchorEvent> anchors;
  TracePhase phase = TracePhase::none;
  int active_count = -1;
  int stage = -1;
  int edge_events = 0;
};

/// One stack-to-root trip: a robot leaves the root right after an anchor
/// assignment and the record closes when it is back at the root. `moves`
/// counts the rounds in which the robot actually moved during the trip.
struct Excursion {
  int robot = 0;
  int anchor_depth = 0;
  long long moves = 0;
  long long dangling_explored = 0;
};

struct RunSummary {
  std::string algorithm;
  int k = 0;
  long long nodes = 0;
  long long edges = 0;
  int depth = 0;
  int max_degree = 0;
  bool tree = true;
  std::uint64_t seed = 0;

  long long rounds_executed = 0;
  long long runtime = 0;  // rounds in which at least one robot moved
  long long edge_events = 0;
  long long completion_round = -1;  // first round after which nothing dangles
  bool complete = false;
  bool hit_round_limit = false;
  bool finishes_at_root = true;  // what the algorithm promises
  bool full_mobility = true;

  std::vector<NodeId> final_positions;
  std::map<int, long long> reanchors_by_depth;  // depth >= 1 assignments
  std::vector<Excursion> excursions;
  bool excursions_tracked = false;
  std::map<EdgeId, int> closed_traversals;  // graph runs: crossings per closed edge
  long long partial_idle_rounds = 0;  // rounds with movement where a movable robot idled
  std::vector<long long> robot_moves;
  long long movable_bits = 0;  // sum over rounds of movable robots
};

struct RunTrace {
  std::vector<RoundRecord> rounds;
  RunSummary summary;
};

}  // namespace cotex

#endif  // COTEX_TRACE_HPP_
