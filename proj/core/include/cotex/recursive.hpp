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

#ifndef COTEX_RECURSIVE_HPP_
#define COTEX_RECURSIVE_HPP_

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/bfdn.hpp"
#include "cotex/engine.hpp"
#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// One round's worth of state for the anchor-discipline checks.
struct AnchorSnapshot {
  const ExplorationView* view = nullptr;
  std::vector<NodeId> positions;
  std::vector<NodeId> anchors;  // kNoNode allowed for inactive robots
  std::vector<bool> active;
  std::vector<bool> edge_event;  // robot triggered an edge event this round
  int depth_budget = 0;          // d
  int k_star = 1;
};

/// Evaluates the eight anchor-discipline predicates and returns the failures:
///   dfs-open-coverage     open nodes lie on some robot's root path
///   parallel-positions    strict ancestors of pairwise meeting points closed
///   partial-exploration   path from an anchor down to its robot half explored
///   limited-anchor-depth  active anchors within the budget
///   inactive-depth        inactive robots within the budget
///   open-node-coverage    open nodes inside active anchor subtrees
///   shallow-activity      k* robots active while any anchor is shallow/open
///   deep-activity         once anchors sit closed at the budget, every active
///                         robot triggers an edge event each round
std::vector<std::string> check_anchor_invariants(const AnchorSnapshot& snap);

/// A component of the recursive composition: drives a robot subset over one
/// subtree scope and exposes anchor bookkeeping to its parent.
class AnchorNode {
 public:
  virtual ~AnchorNode() = default;
  /// (Re)starts on the current view; `active_hint[i]` marks robots that are
  /// mid-exploration and must keep their subtree (others may be relocated);
  /// such robots also keep `prev_anchors[i]` as their anchor.
  virtual void begin(const ExplorationView& view, const std::vector<NodeId>& positions,
                     const std::vector<bool>& active_hint,
                     const std::vector<NodeId>& prev_anchors) = 0;
  virtual void select(RoundContext& ctx) = 0;
  virtual void after_round(const AfterRound& info) = 0;
  virtual int active_count() const = 0;
  virtual bool finished() const = 0;
  virtual bool rebalancing() const { return false; }
  /// True once the final iteration's stopping rule has fired (for the
  /// depth-capped base algorithm: once its band is swept).
  virtual bool iterations_done() const = 0;
  virtual void continue_deep() {}
  virtual void fill_report(AnchorReport& rep) const = 0;
};

/// Depth-capped base algorithm as a recursion leaf.
class BfdnLeaf final : public AnchorNode {
 public:
  BfdnLeaf(NodeId scope_root, int base_depth, int depth_cap, std::vector<int> robots);
  void begin(const ExplorationView& view, const std::vector<NodeId>& positions,
             const std::vector<bool>& active_hint,
             const std::vector<NodeId>& prev_anchors) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  int active_count() const override { return unit_.active_count(); }
  bool finished() const override { return unit_.finished(); }
  bool iterations_done() const override { return unit_.swept_within_cap(); }
  void fill_report(AnchorReport& rep) const override { unit_.fill_report(rep); }
  const BfdnUnit& unit() const { return unit_; }

 private:
  BfdnUnit unit_;
};

using InnerFactory = std::function<std::unique_ptr<AnchorNode>(
    NodeId scope_root, int base_depth, std::vector<int> robots)>;

struct DivideDepthConfig {
  int k_star = 1;
  int n_team = 1;
  int n_iter = 1;
  int d_prime = 1;  // depth gained per iteration, relative to the scope root
  bool run_deep_at_end = true;
  InnerFactory inner;
};

/// Iterated composition: per iteration, partition the robots into teams (one
/// per surviving subtree root, robots already exploring a subtree stay with
/// it), walk the fresh team members over, run the inner instances in
/// parallel, and interrupt them all once fewer than k* robots remain active;
/// the surviving anchors root the next round of subtrees.
class DivideDepthNode final : public AnchorNode {
 public:
  DivideDepthNode(NodeId scope_root, int base_depth, std::vector<int> robots,
                  DivideDepthConfig cfg);

  void begin(const ExplorationView& view, const std::vector<NodeId>& positions,
             const std::vector<bool>& active_hint,
             const std::vector<NodeId>& prev_anchors) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  int active_count() const override;
  bool finished() const override;
  bool rebalancing() const override;
  bool iterations_done() const override;
  void continue_deep() override;
  void fill_report(AnchorReport& rep) const override;

  int iteration() const { return iter_; }

 private:
  enum class Phase { idle, rebalance, running, deep, done };

  struct Team {
    NodeId root = kNoNode;
    std::vector<int> robots;
    std::unique_ptr<AnchorNode> node;
  };

  struct Mover {
    int robot = 0;
    NodeId target = kNoNode;
    bool arrived = false;
  };

  void start_iteration(const ExplorationView& view, const std::vector<NodeId>& positions,
                       const std::vector<bool>& active);
  std::vector<NodeId> carry_anchor_;     // per global robot
  void launch_teams(const ExplorationView& view, const std::vector<NodeId>& positions);
  int total_team_active() const;
  bool robot_in_subtree(const ExplorationView& view, NodeId position, NodeId root) const;

  NodeId scope_root_;
  int base_depth_;
  std::vector<int> robots_;
  DivideDepthConfig cfg_;
  int k_per_team_ = 0;

  Phase phase_ = Phase::idle;
  int iter_ = 0;
  std::set<NodeId> roots_;  // R: subtree roots of the current iteration
  std::vector<Team> teams_;
  std::vector<Mover> movers_;
  std::vector<int> waiting_;             // robots outside every team this iteration
  std::vector<bool> team_active_hint_;   // per global robot
  bool pending_interrupt_ = false;
  const ExplorationView* view_ = nullptr;
};

/// Engine adapter for one divide-depth composition over all k robots.
class DivideDepthAlgorithm : public ExplorationAlgorithm, public AnchorReporting {
 public:
  DivideDepthAlgorithm(DivideDepthConfig cfg, std::string label);
  std::string name() const override { return label_; }
  void begin(const ExplorationView& view, int k) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  bool finishes_at_root() const override { return false; }
  AnchorReport anchor_report() const override;
  const DivideDepthNode* node() const { return node_.get(); }

 private:
  DivideDepthConfig cfg_;
  std::string label_;
  int k_ = 0;
  std::unique_ptr<DivideDepthNode> node_;
};

/// Largest r with r^ell <= k.
long long integer_root(long long k, int ell);

/// Builds the level-`level` recursive algorithm over the given robots: a
/// depth-capped base instance at level 1, otherwise a divide-depth node with
/// k_star teams and q iterations of level-(level-1) instances. The full
/// depth of the node is q^level.
std::unique_ptr<AnchorNode> make_recursive_node(int level, int k_star, int q,
                                                NodeId scope_root, int base_depth,
                                                std::vector<int> robots,
                                                bool run_deep_at_end);

/// Staged doubling-depth driver: runs the recursive algorithm with depth
/// budgets 2^(j*ell) for j = 1, 2, ..., each stage resuming from the current
/// positions and anchors, until the tree is explored. Uses only
/// K = floor(k^(1/ell))^ell of the k robots.
class BfdnEll : public ExplorationAlgorithm, public AnchorReporting {
 public:
  BfdnEll(int ell, int k);

  std::string name() const override { return "bfdn_ell:" + std::to_string(ell_); }
  void begin(const ExplorationView& view, int k) override;
  void select(RoundContext& ctx) override;
  void after_round(const AfterRound& info) override;
  bool finishes_at_root() const override { return false; }
  AnchorReport anchor_report() const override;

  int ell() const { return ell_; }
  int used_robots() const { return K_; }
  int k_star() const { return k_star_; }
  int stage() const { return stage_; }
  /// Depth budget d_j = 2^(j*ell) of the running stage.
  int current_depth_budget() const { return depth_budget_; }

 private:
  void build_stage(const ExplorationView& view, const std::vector<NodeId>& positions,
                   const std::vector<bool>& active_hint);

  int ell_;
  int k_ = 0;
  int K_ = 0;
  int k_star_ = 0;
  int stage_ = 0;
  int depth_budget_ = 0;
  bool drained_ = false;
  std::unique_ptr<AnchorNode> node_;
  const ExplorationView* view_ = nullptr;
};

struct StageShallowAudit {
  int stage = 0;
  int stage_depth = 0;
  long long shallow_rounds = 0;  // includes suspended rebalancing rounds
  long long edge_events = 0;
  double measured_f = 0.0;  // smallest f with events >= k*(rounds - f)
};

/// Per-stage shallow efficiency measured from a recorded trace; `ell` only
/// fills in the stage depths 2^(stage*ell).
std::vector<StageShallowAudit> shallow_efficiency_audit(const RunTrace& trace, int k_star,
                                                        int ell = 1);

struct AnchorAuditOutcome {
  std::vector<std::string> violations;
  long long suspended_rounds = 0;
  long long checked_rounds = 0;
  RunTrace trace;
};

/// Runs the staged algorithm under the engine with a per-round evaluation of
/// the eight anchor predicates; activity checks are suspended (and counted)
/// on rebalancing rounds.
AnchorAuditOutcome run_anchor_audited(const World& tree, BfdnEll& algo, int k);

}  // namespace cotex

#endif  // COTEX_RECURSIVE_HPP_
