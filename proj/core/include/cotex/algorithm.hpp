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

#ifndef COTEX_ALGORITHM_HPP_
#define COTEX_ALGORITHM_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cotex/trace.hpp"
#include "cotex/view.hpp"

namespace cotex {

struct Selection {
  enum class Kind : unsigned char { stay, up, edge };
  Kind kind = Kind::stay;
  EdgeId edge = kNoEdge;
};

/// One round of the selection phase. The engine queries the algorithm for the
/// moves of all movable robots; a selected edge must be incident to the
/// robot's position and a dangling edge may be selected by at most one robot
/// per round. Robots left untouched stay put.
class RoundContext {
 public:
  RoundContext(long long round, const ExplorationView& view,
               const std::vector<NodeId>& positions, std::uint64_t movable);

  long long round() const { return round_; }
  const ExplorationView& view() const { return view_; }
  const std::vector<NodeId>& positions() const { return positions_; }
  int k() const { return static_cast<int>(positions_.size()); }
  bool movable(int robot) const { return (movable_ >> robot) & 1; }
  std::uint64_t movable_mask() const { return movable_; }

  bool edge_taken(EdgeId e) const { return taken_.count(e) > 0; }
  const Selection& selection(int robot) const { return selections_[robot]; }

  void select_edge(int robot, EdgeId e);
  void select_up(int robot);
  void select_stay(int robot);

  // Instrumentation sinks copied into the trace.
  void note_anchor(int robot, NodeId node, int depth);
  void note_phase(TracePhase phase) { phase_ = phase; }
  void note_active(int count) { active_count_ = count; }
  void note_stage(int stage) { stage_ = stage; }

  const std::vector<AnchorEvent>& anchor_events() const { return anchors_; }
  TracePhase phase() const { return phase_; }
  int active_count() const { return active_count_; }
  int stage() const { return stage_; }

 private:
  void check_robot(int robot) const;

  long long round_;
  const ExplorationView& view_;
  const std::vector<NodeId>& positions_;
  std::uint64_t movable_;
  std::vector<Selection> selections_;
  std::set<EdgeId> taken_;
  std::vector<AnchorEvent> anchors_;
  TracePhase phase_ = TracePhase::none;
  int active_count_ = -1;
  int stage_ = -1;
};

struct AfterRound {
  long long round = 0;
  const ExplorationView& view;
  const std::vector<NodeId>& positions;
  const std::vector<MoveRecord>& moves;
  const std::vector<EdgeId>& discovered;
};

class ExplorationAlgorithm {
 public:
  virtual ~ExplorationAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual void begin(const ExplorationView& view, int k) = 0;
  virtual void select(RoundContext& ctx) = 0;
  virtual void after_round(const AfterRound& info) {}
  /// Whether a full-mobility run is expected to park every robot at the root.
  virtual bool finishes_at_root() const { return true; }
};

/// Per-robot anchor bookkeeping, exposed by anchor-driven algorithms for
/// audits and adaptive adversaries.
struct AnchorReport {
  std::vector<NodeId> anchor;  // kNoNode when the robot has none
  std::vector<bool> active;
  int depth_budget = -1;
  int k_star = -1;
};

class AnchorReporting {
 public:
  virtual ~AnchorReporting() = default;
  virtual AnchorReport anchor_report() const = 0;
};

}  // namespace cotex

#endif  // COTEX_ALGORITHM_HPP_
