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

#ifndef COTEX_BFDN_HPP_
#define COTEX_BFDN_HPP_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cotex/algorithm.hpp"

namespace cotex {

/// Breadth-first depth-next exploration over one subtree scope.
///
/// A robot at the scope root is assigned an anchor: an open node of minimal
/// depth (capped when a depth budget is set), balanced by current anchor
/// load with ties to the smallest node id. It descends the stacked path to
/// the anchor, then repeatedly takes an incident unselected dangling edge
/// (lowest port) and otherwise climbs one step back.
///
/// With `activity` set the unit also keeps the depth-capped bookkeeping:
/// anchors of robots below a fully swept depth band sink along the robot's
/// own path down to the cap, and a robot with no work left inside the cap
/// turns inactive and drifts back to the scope root where it waits.
class BfdnUnit {
 public:
  struct Config {
    NodeId scope_root = 0;
    int base_depth = 0;
    int depth_cap = -1;  // relative to scope_root; -1 = unbounded
    bool activity = false;
    std::vector<int> robots;  // ascending global robot ids
  };

  explicit BfdnUnit(Config cfg);

  /// (Re)starts the unit on the current view. A robot away from the scope
  /// root keeps its previous anchor when one is supplied (indexed by global
  /// robot id); otherwise it is re-anchored to the shallowest open node on
  /// its path to the scope root, or to its own position on a clean path.
  void begin(const ExplorationView& view, const std::vector<NodeId>& positions,
             const std::vector<NodeId>& previous_anchors = {});

  void select(RoundContext& ctx);
  void after_round(const AfterRound& info);

  const Config& config() const { return cfg_; }
  int active_count() const;
  bool robot_active(int robot) const { return state(robot).active; }
  NodeId anchor_of(int robot) const { return state(robot).anchor; }
  const std::vector<EdgeId>& stack_of(int robot) const { return state(robot).stack; }
  /// True once nothing dangles at depth <= cap inside the scope.
  bool swept_within_cap() const { return !open_within_cap(); }
  bool finished() const;
  void fill_report(AnchorReport& rep) const;

  /// The anchor the reanchoring rule would hand robot `robot` right now.
  NodeId reanchor_choice(int robot) const;

  // Test hook: overrides a robot's anchor with load bookkeeping.
  void set_anchor_for_test(int robot, NodeId v);

 private:
  struct RobotState {
    NodeId anchor = kNoNode;
    std::vector<EdgeId> stack;  // back() = next edge to take
    bool active = true;
  };

  RobotState& state(int robot);
  const RobotState& state(int robot) const;
  bool in_scope(NodeId v) const;
  int rel_depth(NodeId v) const;
  bool open_within_cap() const;
  const std::set<NodeId>* candidates() const;
  void set_anchor(int robot, NodeId v);
  void sink_anchor(int robot, NodeId position);
  void load_stack(RobotState& rs, NodeId target);
  void sync_open(NodeId v);

  Config cfg_;
  const ExplorationView* view_ = nullptr;
  std::vector<RobotState> states_;
  std::unordered_map<int, int> robot_index_;
  std::map<int, std::set<NodeId>> open_rel_;  // in-scope open nodes by relative depth
  std::unordered_map<NodeId, int> anchor_count_;
  mutable std::unordered_map<NodeId, bool> scope_memo_;
};

/// Engine adapter for the single-scope algorithm: the plain variant when no
/// cap is given, the depth-capped variant otherwise.
class BfdnAlgorithm : public ExplorationAlgorithm, public AnchorReporting {
 public:
  explicit BfdnAlgorithm(int depth_cap = -1, bool activity = false);

  std::string name() const override;
  void begin(const ExplorationView& view, int k) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  bool finishes_at_root() const override { return !activity_; }
  AnchorReport anchor_report() const override;

  const BfdnUnit& unit() const { return *unit_; }
  BfdnUnit& unit() { return *unit_; }

 private:
  int depth_cap_;
  bool activity_;
  int k_ = 0;
  std::unique_ptr<BfdnUnit> unit_;
};

}  // namespace cotex

#endif  // COTEX_BFDN_HPP_
