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

#ifndef COTEX_PLANNER_HPP_
#define COTEX_PLANNER_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/engine.hpp"
#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// Node-local observations a robot may make at its own position. Keeping all
/// structure reads behind this interface makes the restricted-communication
/// variant checkable: a logging double can assert that every query a robot
/// issues targets the node it stands on.
class LocalSensor {
 public:
  virtual ~LocalSensor() = default;
  virtual int degree(int robot, NodeId node) = 0;
  virtual EdgeId edge_at_port(int robot, NodeId node, int port) = 0;
  virtual std::vector<bool> finished_ports(int robot, NodeId node) = 0;
};

class ViewSensor : public LocalSensor {
 public:
  explicit ViewSensor(const ExplorationView& view) : view_(&view) {}
  int degree(int, NodeId node) override {
    return static_cast<int>(view_->ports_of(node).size());
  }
  EdgeId edge_at_port(int, NodeId node, int port) override {
    return view_->ports_of(node)[port - 1];
  }
  std::vector<bool> finished_ports(int, NodeId node) override {
    return view_->finished_ports(node);
  }

 private:
  const ExplorationView* view_;
};

/// Test double: forwards to a ViewSensor and records every query so a test
/// can assert node-locality (each query hits the querying robot's position).
class LoggingSensor : public LocalSensor {
 public:
  struct Query {
    int robot;
    NodeId node;
  };

  LoggingSensor(const ExplorationView& view,
                std::function<NodeId(int robot)> position_of)
      : inner_(view), position_of_(std::move(position_of)) {}

  int degree(int robot, NodeId node) override {
    log(robot, node);
    return inner_.degree(robot, node);
  }
  EdgeId edge_at_port(int robot, NodeId node, int port) override {
    log(robot, node);
    return inner_.edge_at_port(robot, node, port);
  }
  std::vector<bool> finished_ports(int robot, NodeId node) override {
    log(robot, node);
    return inner_.finished_ports(robot, node);
  }

  const std::vector<Query>& queries() const { return queries_; }
  long long foreign_reads() const { return foreign_reads_; }

 private:
  void log(int robot, NodeId node) {
    queries_.push_back({robot, node});
    if (position_of_ && position_of_(robot) != node) ++foreign_reads_;
  }

  ViewSensor inner_;
  std::function<NodeId(int robot)> position_of_;
  std::vector<Query> queries_;
  long long foreign_reads_ = 0;
};

/// Shared per-node port dispenser: hands out the ports of a node in strictly
/// decreasing order, one per call, and answers 1 (the way up) forever once
/// only the parent port is left.
class PartitionCounters {
 public:
  int step(NodeId node, int degree);
  int peek(NodeId node, int degree) const;

 private:
  std::map<NodeId, int> next_;
};

/// Anchor identity in the restricted model: the port numbers leading to the
/// node from the root.
using PortSeq = std::vector<int>;

/// Exploration with all coordination at the root. Robots carry a port stack
/// and a finished-port bitmap only; away from the root they act on local
/// observations (finished ports, PARTITION). The root-side planner tracks a
/// working depth, the anchors at that depth, and which of them (and of their
/// children) a robot has already come back from, and assigns returning
/// robots to the remaining anchors with balanced counts.
class PlannerBfdn : public ExplorationAlgorithm, public AnchorReporting {
 public:
  using SensorFactory =
      std::function<std::unique_ptr<LocalSensor>(const ExplorationView&)>;

  PlannerBfdn();
  explicit PlannerBfdn(SensorFactory factory);

  std::string name() const override { return "planner"; }
  void begin(const ExplorationView& view, int k) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  AnchorReport anchor_report() const override;

  /// Largest accounted robot memory so far, in bits: stack entries times
  /// ceil(log2(max degree)) plus the max-degree-sized bitmap.
  long long memory_peak_bits() const;
  int working_depth() const { return depth_; }
  bool exploration_finished_flag() const { return finished_; }

 private:
  struct Robot {
    enum class Mode { at_root, descending, exploring, returning };
    Mode mode = Mode::at_root;
    bool assigned = false;
    bool pending_report = false;
    std::vector<int> stack;  // descent: ports to pop; exploring: path below anchor
    std::vector<bool> bitmap;
    PortSeq anchor;
    NodeId anchor_node = kNoNode;  // learned on arrival, for reporting only
    long long peak_bits = 0;
  };

  void account(Robot& r) const;
  void process_reports(const std::vector<int>& returning);
  void promote_if_exhausted();
  void assign(int robot_id, Robot& r);
  std::vector<int> child_ports(const PortSeq& seq, const std::vector<bool>& known) const;

  SensorFactory factory_;
  std::unique_ptr<LocalSensor> sensor_;
  const ExplorationView* view_ = nullptr;
  int k_ = 0;
  int port_bits_ = 0;
  int delta_ = 0;

  std::vector<Robot> robots_;
  PartitionCounters partition_;

  int depth_ = 0;
  std::set<PortSeq> anchors_;                    // A
  std::set<PortSeq> returned_;                   // R
  std::map<PortSeq, std::vector<bool>> known_;   // OR of reported bitmaps per anchor
  std::map<PortSeq, int> load_;                  // robots currently assigned
  std::map<PortSeq, NodeId> seq_node_;           // learned identities, reporting only
  bool finished_ = false;
};

struct PlannerRunResult {
  RunTrace trace;
  long long memory_peak_bits = 0;
  long long memory_budget_bits = 0;
  double runtime_bound = 0.0;
  bool bound_ok = false;
  bool memory_ok = false;
};

/// Full simulation under the restricted model; checks the runtime bound
/// 2n/k + D^2(min(ln k, ln Delta)+2) and the Delta + D*ceil(log2 Delta)
/// memory budget. Throws std::logic_error when either fails.
PlannerRunResult run_planner_bfdn(const World& tree, int k,
                                  PlannerBfdn::SensorFactory factory = nullptr);

}  // namespace cotex

#endif  // COTEX_PLANNER_HPP_
