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

#include "cotex/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cotex {

namespace {

NodeId lca_of(const ExplorationView& view, NodeId a, NodeId b) {
  int da = view.depth_of(a), db = view.depth_of(b);
  while (da > db) {
    a = view.parent_of(a);
    --da;
  }
  while (db > da) {
    b = view.parent_of(b);
    --db;
  }
  while (a != b) {
    a = view.parent_of(a);
    b = view.parent_of(b);
  }
  return a;
}

// An edge into `child` is half explored when nobody has come back up yet.
bool half_explored(const ExplorationView& view, NodeId child) {
  const NodeId parent = view.parent_of(child);
  const EdgeId e = view.parent_edge_of(child);
  const int port = view.world().port_of(parent, e);
  return !view.finished_ports(parent)[port];
}

}  // namespace

std::vector<std::string> check_anchor_invariants(const AnchorSnapshot& snap) {
  std::vector<std::string> out;
  const ExplorationView& view = *snap.view;
  const int k = static_cast<int>(snap.positions.size());
  const int n = view.world().node_count();
  const int d = snap.depth_budget;

  std::vector<char> open_anc(n, 0);  // some strict ancestor is open
  for (NodeId v : view.discovered_nodes()) {
    const NodeId p = view.parent_of(v);
    open_anc[v] = p != kNoNode && (view.node_open(p) || open_anc[p]);
  }

  // dfs-open-coverage: open nodes on the union of root paths.
  std::vector<char> on_path(n, 0);
  for (NodeId u : snap.positions) {
    NodeId x = u;
    while (x != kNoNode && !on_path[x]) {
      on_path[x] = 1;
      x = view.parent_of(x);
    }
  }
  for (const auto& [depth, nodes] : view.open_by_depth()) {
    for (NodeId v : nodes) {
      if (!on_path[v])
        out.push_back("dfs-open-coverage: open node " + std::to_string(v) +
                      " off every robot path");
    }
  }

  // parallel-positions: strict ancestors of every pairwise meeting point are
  // closed. Distinct positions only.
  std::vector<NodeId> distinct = snap.positions;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const NodeId w = lca_of(view, distinct[i], distinct[j]);
      if (open_anc[w]) {
        out.push_back("parallel-positions: meeting point " + std::to_string(w) +
                      " of nodes " + std::to_string(distinct[i]) + "," +
                      std::to_string(distinct[j]) + " has an open strict ancestor");
      }
    }
  }

  // partial-exploration: anchor above the robot => half-explored path between.
  for (int i = 0; i < k; ++i) {
    if (!snap.active[i] || snap.anchors[i] == kNoNode) continue;
    const NodeId v = snap.anchors[i];
    NodeId x = snap.positions[i];
    if (view.depth_of(v) > view.depth_of(x)) continue;
    std::vector<NodeId> chain;
    while (view.depth_of(x) > view.depth_of(v)) {
      chain.push_back(x);
      x = view.parent_of(x);
    }
    if (x != v) continue;  // anchor not an ancestor
    for (NodeId c : chain) {
      if (!half_explored(view, c)) {
        out.push_back("partial-exploration: robot " + std::to_string(i) + " edge above " +
                      std::to_string(c) + " not half explored");
        break;
      }
    }
  }

  // limited-anchor-depth / inactive-depth.
  int actives = 0;
  for (int i = 0; i < k; ++i) {
    if (snap.active[i]) {
      ++actives;
      if (snap.anchors[i] != kNoNode && view.depth_of(snap.anchors[i]) > d) {
        out.push_back("limited-anchor-depth: robot " + std::to_string(i) + " anchored at depth " +
                      std::to_string(view.depth_of(snap.anchors[i])) + " > " + std::to_string(d));
      }
    } else if (view.discovered(snap.positions[i]) &&
               view.depth_of(snap.positions[i]) > d) {
      out.push_back("inactive-depth: robot " + std::to_string(i) + " waiting at depth " +
                    std::to_string(view.depth_of(snap.positions[i])) + " > " + std::to_string(d));
    }
  }

  // open-node-coverage: open nodes inside active anchor subtrees.
  {
    std::vector<char> is_anchor(n, 0), covered(n, 0);
    for (int i = 0; i < k; ++i) {
      if (snap.active[i] && snap.anchors[i] != kNoNode) is_anchor[snap.anchors[i]] = 1;
    }
    for (NodeId v : view.discovered_nodes()) {
      const NodeId p = view.parent_of(v);
      covered[v] = is_anchor[v] || (p != kNoNode && covered[p]);
    }
    for (const auto& [depth, nodes] : view.open_by_depth()) {
      for (NodeId v : nodes) {
        if (!covered[v])
          out.push_back("open-node-coverage: open node " + std::to_string(v) +
                        " outside every active anchor subtree");
      }
    }
  }

  // shallow-activity / deep-activity.
  bool premise_shallow = false;
  bool all_at_budget_closed = actives > 0;
  for (int i = 0; i < k; ++i) {
    if (!snap.active[i] || snap.anchors[i] == kNoNode) continue;
    const NodeId v = snap.anchors[i];
    if (view.depth_of(v) < d || view.node_open(v)) premise_shallow = true;
    if (view.depth_of(v) != d || view.node_open(v)) all_at_budget_closed = false;
  }
  if (premise_shallow && actives < snap.k_star) {
    out.push_back("shallow-activity: only " + std::to_string(actives) +
                  " active robots with a shallow or open anchor present (k* = " +
                  std::to_string(snap.k_star) + ")");
  }
  if (all_at_budget_closed) {
    for (int i = 0; i < k; ++i) {
      if (snap.active[i] && !snap.edge_event[i]) {
        out.push_back("deep-activity: active robot " + std::to_string(i) +
                      " triggered no edge event this round");
      }
    }
  }
  return out;
}

BfdnLeaf::BfdnLeaf(NodeId scope_root, int base_depth, int depth_cap, std::vector<int> robots)
    : unit_(BfdnUnit::Config{scope_root, base_depth, depth_cap, true, std::move(robots)}) {}

void BfdnLeaf::begin(const ExplorationView& view, const std::vector<NodeId>& positions,
                     const std::vector<bool>&, const std::vector<NodeId>& prev_anchors) {
  unit_.begin(view, positions, prev_anchors);
}

void BfdnLeaf::select(RoundContext& ctx) { unit_.select(ctx); }

void BfdnLeaf::after_round(const AfterRound& info) { unit_.after_round(info); }

DivideDepthNode::DivideDepthNode(NodeId scope_root, int base_depth, std::vector<int> robots,
                                 DivideDepthConfig cfg)
    : scope_root_(scope_root),
      base_depth_(base_depth),
      robots_(std::move(robots)),
      cfg_(std::move(cfg)) {
  std::sort(robots_.begin(), robots_.end());
  if (cfg_.n_team < cfg_.k_star)
    throw std::invalid_argument("divide-depth needs n_team >= k_star");
  if (robots_.size() % cfg_.n_team != 0)
    throw std::invalid_argument("divide-depth: robots not divisible into teams");
  k_per_team_ = static_cast<int>(robots_.size()) / cfg_.n_team;
}

bool DivideDepthNode::robot_in_subtree(const ExplorationView& view, NodeId position,
                                       NodeId root) const {
  if (!view.discovered(position)) return false;
  NodeId x = position;
  while (x != kNoNode && view.depth_of(x) > view.depth_of(root)) x = view.parent_of(x);
  return x == root;
}

void DivideDepthNode::begin(const ExplorationView& view, const std::vector<NodeId>& positions,
                            const std::vector<bool>& active_hint,
                            const std::vector<NodeId>& prev_anchors) {
  view_ = &view;
  roots_ = {scope_root_};
  iter_ = 0;
  phase_ = Phase::idle;
  carry_anchor_.assign(positions.size(), kNoNode);
  std::vector<bool> active(positions.size(), false);
  for (int r : robots_) {
    if (r < static_cast<int>(active_hint.size()) && active_hint[r]) {
      active[r] = true;
      carry_anchor_[r] =
          r < static_cast<int>(prev_anchors.size()) ? prev_anchors[r] : kNoNode;
    }
  }
  start_iteration(view, positions, active);
}

void DivideDepthNode::start_iteration(const ExplorationView& view,
                                      const std::vector<NodeId>& positions,
                                      const std::vector<bool>& active) {
  ++iter_;
  teams_.clear();
  movers_.clear();
  waiting_.clear();
  pending_interrupt_ = false;
  team_active_hint_ = active;

  if (roots_.empty()) {
    phase_ = Phase::done;
    return;
  }
  if (static_cast<int>(roots_.size()) > cfg_.n_team)
    throw std::logic_error("divide-depth: more surviving roots than teams");

  std::vector<NodeId> root_list(roots_.begin(), roots_.end());
  std::vector<std::vector<int>> members(root_list.size());
  std::vector<int> pool;
  for (int r : robots_) {
    if (active[r]) {
      bool placed = false;
      for (std::size_t t = 0; t < root_list.size(); ++t) {
        if (robot_in_subtree(view, positions[r], root_list[t])) {
          members[t].push_back(r);
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("divide-depth: active robot outside every subtree");
    } else {
      pool.push_back(r);
    }
  }
  for (const auto& m : members) {
    if (static_cast<int>(m.size()) > k_per_team_)
      throw std::logic_error("divide-depth: team overflow (progressed robots exceed k')");
  }

  std::size_t next_pool = 0;
  for (std::size_t t = 0; t < root_list.size(); ++t) {
    while (static_cast<int>(members[t].size()) < k_per_team_) {
      const int robot = pool[next_pool++];
      members[t].push_back(robot);
      Mover mv;
      mv.robot = robot;
      mv.target = root_list[t];
      mv.arrived = positions[robot] == root_list[t];
      movers_.push_back(mv);
    }
    std::sort(members[t].begin(), members[t].end());
    Team team;
    team.root = root_list[t];
    team.robots = members[t];
    teams_.push_back(std::move(team));
  }
  waiting_.assign(pool.begin() + next_pool, pool.end());

  bool walking = false;
  for (const auto& mv : movers_) walking |= !mv.arrived;
  if (walking) {
    phase_ = Phase::rebalance;
  } else {
    launch_teams(view, positions);
  }
}

void DivideDepthNode::launch_teams(const ExplorationView& view,
                                   const std::vector<NodeId>& positions) {
  for (auto& team : teams_) {
    team.node = cfg_.inner(team.root, view.depth_of(team.root), team.robots);
    team.node->begin(view, positions, team_active_hint_, carry_anchor_);
  }
  phase_ = Phase::running;
}

void DivideDepthNode::select(RoundContext& ctx) {
  const auto& pos = ctx.positions();
  switch (phase_) {
    case Phase::rebalance:
      for (auto& mv : movers_) {
        if (mv.arrived || !ctx.movable(mv.robot)) continue;
        const NodeId u = pos[mv.robot];
        if (u == mv.target) {
          mv.arrived = true;
          continue;
        }
        const ExplorationView& view = ctx.view();
        // One step along traversed edges: down when the target hangs below,
        // up otherwise.
        if (view.depth_of(mv.target) > view.depth_of(u)) {
          NodeId x = mv.target;
          while (view.depth_of(x) > view.depth_of(u) + 1) x = view.parent_of(x);
          if (view.parent_of(x) == u) {
            ctx.select_edge(mv.robot, view.parent_edge_of(x));
            continue;
          }
        }
        ctx.select_up(mv.robot);
      }
      break;
    case Phase::running:
    case Phase::deep:
      for (auto& team : teams_) team.node->select(ctx);
      if (phase_ == Phase::running && total_team_active() < cfg_.k_star)
        pending_interrupt_ = true;
      break;
    case Phase::idle:
    case Phase::done:
      break;
  }
}

void DivideDepthNode::after_round(const AfterRound& info) {
  view_ = &info.view;
  switch (phase_) {
    case Phase::rebalance: {
      bool all_arrived = true;
      for (auto& mv : movers_) {
        if (!mv.arrived && info.positions[mv.robot] == mv.target) mv.arrived = true;
        all_arrived &= mv.arrived;
      }
      if (all_arrived) launch_teams(info.view, info.positions);
      break;
    }
    case Phase::running: {
      for (auto& team : teams_) team.node->after_round(info);
      if (!pending_interrupt_) break;
      // Interrupt: collect the survivors and their anchors.
      AnchorReport rep;
      rep.anchor.assign(info.positions.size(), kNoNode);
      rep.active.assign(info.positions.size(), false);
      for (const auto& team : teams_) team.node->fill_report(rep);
      std::vector<bool> active(info.positions.size(), false);
      roots_.clear();
      carry_anchor_.assign(info.positions.size(), kNoNode);
      for (int r : robots_) {
        if (rep.active[r]) {
          active[r] = true;
          carry_anchor_[r] = rep.anchor[r];
          if (rep.anchor[r] == kNoNode)
            throw std::logic_error("divide-depth: active robot without an anchor");
          roots_.insert(rep.anchor[r]);
        }
      }
      if (iter_ >= cfg_.n_iter || roots_.empty()) {
        pending_interrupt_ = false;
        phase_ = cfg_.run_deep_at_end && !roots_.empty() ? Phase::deep : Phase::done;
      } else {
        start_iteration(info.view, info.positions, active);
      }
      break;
    }
    case Phase::deep: {
      bool done = true;
      for (auto& team : teams_) {
        team.node->after_round(info);
        done &= team.node->finished();
      }
      if (done) phase_ = Phase::done;
      break;
    }
    case Phase::idle:
    case Phase::done:
      break;
  }
}

int DivideDepthNode::total_team_active() const {
  int total = 0;
  for (const auto& team : teams_) total += team.node ? team.node->active_count() : 0;
  return total;
}

int DivideDepthNode::active_count() const {
  switch (phase_) {
    case Phase::rebalance: {
      int count = 0;
      for (const auto& team : teams_) {
        for (int r : team.robots) {
          if (team_active_hint_[r]) ++count;
        }
      }
      for (const auto& mv : movers_) {
        if (!team_active_hint_[mv.robot]) ++count;
      }
      return count;
    }
    case Phase::running:
    case Phase::deep:
      return total_team_active();
    default:
      return 0;
  }
}

bool DivideDepthNode::finished() const {
  if (phase_ != Phase::done) return false;
  for (const auto& team : teams_) {
    if (team.node && !team.node->finished()) return false;
  }
  return true;
}

bool DivideDepthNode::rebalancing() const {
  if (phase_ == Phase::rebalance || pending_interrupt_) return true;
  if (phase_ == Phase::running || phase_ == Phase::deep) {
    for (const auto& team : teams_) {
      if (team.node && team.node->rebalancing()) return true;
    }
  }
  return false;
}

bool DivideDepthNode::iterations_done() const {
  return phase_ == Phase::deep || phase_ == Phase::done;
}

void DivideDepthNode::continue_deep() {
  if (phase_ == Phase::done && !teams_.empty()) {
    bool live = false;
    for (const auto& team : teams_) live |= team.node && !team.node->finished();
    if (live) phase_ = Phase::deep;
  }
}

void DivideDepthNode::fill_report(AnchorReport& rep) const {
  switch (phase_) {
    case Phase::rebalance: {
      std::vector<char> moving(rep.anchor.size(), 0);
      std::vector<NodeId> target_of(rep.anchor.size(), kNoNode);
      for (const auto& mv : movers_) {
        moving[mv.robot] = 1;
        target_of[mv.robot] = mv.target;
      }
      for (const auto& team : teams_) {
        for (int r : team.robots) {
          rep.active[r] = true;
          rep.anchor[r] = moving[r] ? target_of[r] : carry_anchor_[r];
        }
      }
      for (int r : waiting_) {
        rep.active[r] = false;
        rep.anchor[r] = kNoNode;
      }
      break;
    }
    case Phase::running:
    case Phase::deep:
    case Phase::done:
      for (const auto& team : teams_) {
        if (team.node) team.node->fill_report(rep);
      }
      for (int r : waiting_) {
        rep.active[r] = false;
        rep.anchor[r] = kNoNode;
      }
      break;
    case Phase::idle:
      break;
  }
}

DivideDepthAlgorithm::DivideDepthAlgorithm(DivideDepthConfig cfg, std::string label)
    : cfg_(std::move(cfg)), label_(std::move(label)) {}

void DivideDepthAlgorithm::begin(const ExplorationView& view, int k) {
  k_ = k;
  std::vector<int> robots(k);
  std::iota(robots.begin(), robots.end(), 0);
  node_ = std::make_unique<DivideDepthNode>(view.root(), 0, std::move(robots), cfg_);
  std::vector<NodeId> positions(k, view.root());
  node_->begin(view, positions, std::vector<bool>(k, false),
               std::vector<NodeId>(k, kNoNode));
}

void DivideDepthAlgorithm::select(RoundContext& ctx) {
  node_->select(ctx);
  ctx.note_active(node_->active_count());
  ctx.note_phase(node_->rebalancing() ? TracePhase::rebalance
                 : node_->iterations_done() ? TracePhase::deep
                                            : TracePhase::shallow);
}

void DivideDepthAlgorithm::after_round(const AfterRound& info) { node_->after_round(info); }

AnchorReport DivideDepthAlgorithm::anchor_report() const {
  AnchorReport rep;
  rep.anchor.assign(k_, kNoNode);
  rep.active.assign(k_, false);
  rep.k_star = cfg_.k_star;
  node_->fill_report(rep);
  return rep;
}

long long integer_root(long long k, int ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("integer_root: k, ell >= 1");
  long long r = static_cast<long long>(std::floor(std::pow(static_cast<double>(k), 1.0 / ell)));
  auto pow_ok = [&](long long base) {
    long long p = 1;
    for (int i = 0; i < ell; ++i) {
      if (base != 0 && p > k / base) return false;
      p *= base;
    }
    return p <= k;
  };
  while (r > 1 && !pow_ok(r)) --r;
  while (pow_ok(r + 1)) ++r;
  return r;
}

std::unique_ptr<AnchorNode> make_recursive_node(int level, int k_star, int q,
                                                NodeId scope_root, int base_depth,
                                                std::vector<int> robots,
                                                bool run_deep_at_end) {
  if (level <= 1) {
    return std::make_unique<BfdnLeaf>(scope_root, base_depth, q, std::move(robots));
  }
  DivideDepthConfig cfg;
  cfg.k_star = k_star;
  cfg.n_team = k_star;
  cfg.n_iter = q;
  int d_prime = 1;
  for (int i = 0; i < level - 1; ++i) d_prime *= q;
  cfg.d_prime = d_prime;
  cfg.run_deep_at_end = run_deep_at_end;
  cfg.inner = [level, k_star, q](NodeId root, int depth, std::vector<int> team) {
    return make_recursive_node(level - 1, k_star, q, root, depth, std::move(team), true);
  };
  return std::make_unique<DivideDepthNode>(scope_root, base_depth, std::move(robots),
                                           std::move(cfg));
}

BfdnEll::BfdnEll(int ell, int k) : ell_(ell), k_(k) {
  if (ell < 1) throw std::invalid_argument("bfdn_ell: ell >= 1");
  k_star_ = static_cast<int>(integer_root(k, ell));
  K_ = 1;
  for (int i = 0; i < ell; ++i) K_ *= k_star_;
}

void BfdnEll::build_stage(const ExplorationView& view, const std::vector<NodeId>& positions,
                          const std::vector<bool>& active_hint) {
  ++stage_;
  if (stage_ * ell_ > 26) throw std::logic_error("bfdn_ell: depth schedule overflow");
  const int q = 1 << stage_;  // iterations per level; full depth q^ell
  depth_budget_ = 1;
  for (int i = 0; i < ell_; ++i) depth_budget_ *= q;

  std::vector<NodeId> prev(positions.size(), kNoNode);
  if (node_) {
    AnchorReport rep = anchor_report();
    prev = rep.anchor;
  }
  std::vector<int> robots(K_);
  std::iota(robots.begin(), robots.end(), 0);
  node_ = make_recursive_node(ell_, ell_ == 1 ? K_ : k_star_, q, view.root(), 0,
                              std::move(robots), false);
  node_->begin(view, positions, active_hint, prev);
}

void BfdnEll::begin(const ExplorationView& view, int k) {
  if (k != k_) throw std::invalid_argument("bfdn_ell: constructed for k = " + std::to_string(k_));
  view_ = &view;
  stage_ = 0;
  drained_ = false;
  node_.reset();
  std::vector<NodeId> positions(k, view.root());
  build_stage(view, positions, std::vector<bool>(k, false));
}

void BfdnEll::select(RoundContext& ctx) {
  node_->select(ctx);
  ctx.note_active(node_->active_count());
  ctx.note_stage(stage_);
  TracePhase phase = TracePhase::shallow;
  if (node_->rebalancing()) {
    phase = TracePhase::rebalance;
  } else {
    const int min_open = ctx.view().min_open_depth();
    if (min_open < 0 || min_open > depth_budget_) phase = TracePhase::deep;
  }
  ctx.note_phase(phase);
}

void BfdnEll::after_round(const AfterRound& info) {
  view_ = &info.view;
  node_->after_round(info);
  if (drained_) return;
  const bool stage_over = node_->iterations_done();
  if (!stage_over) return;
  if (info.view.fully_explored()) {
    drained_ = true;
    node_->continue_deep();
    return;
  }
  AnchorReport rep = anchor_report();
  std::vector<bool> active(info.positions.size(), false);
  for (int i = 0; i < K_; ++i) active[i] = rep.active[i];
  build_stage(info.view, info.positions, active);
}

AnchorReport BfdnEll::anchor_report() const {
  AnchorReport rep;
  rep.anchor.assign(k_, kNoNode);
  rep.active.assign(k_, false);
  rep.depth_budget = depth_budget_;
  rep.k_star = ell_ == 1 ? K_ : k_star_;
  if (node_) node_->fill_report(rep);
  return rep;
}

std::vector<StageShallowAudit> shallow_efficiency_audit(const RunTrace& trace, int k_star,
                                                        int ell) {
  std::vector<StageShallowAudit> out;
  auto row = [&](int stage) -> StageShallowAudit& {
    for (auto& r : out) {
      if (r.stage == stage) return r;
    }
    out.push_back(StageShallowAudit{stage, stage * ell < 30 ? 1 << (stage * ell) : 0, 0, 0, 0.0});
    return out.back();
  };
  for (const auto& rec : trace.rounds) {
    if (rec.stage < 0 || rec.phase == TracePhase::deep) continue;
    auto& r = row(rec.stage);
    ++r.shallow_rounds;
    r.edge_events += rec.edge_events;
  }
  for (auto& r : out) {
    r.measured_f = std::max(
        0.0, static_cast<double>(r.shallow_rounds) -
                 static_cast<double>(r.edge_events) / static_cast<double>(k_star));
  }
  return out;
}

AnchorAuditOutcome run_anchor_audited(const World& tree, BfdnEll& algo, int k) {
  AnchorAuditOutcome outcome;
  RunOptions opts;
  opts.round_hook = [&](const RoundInfo& info) {
    if (info.record.phase == TracePhase::rebalance) {
      ++outcome.suspended_rounds;
    }
    ++outcome.checked_rounds;
    AnchorSnapshot snap;
    snap.view = &info.view;
    snap.positions = info.positions;
    AnchorReport rep = algo.anchor_report();
    snap.anchors = rep.anchor;
    snap.active = std::vector<bool>(rep.active.begin(), rep.active.end());
    snap.depth_budget = algo.current_depth_budget();
    snap.k_star = algo.k_star();
    snap.edge_event.assign(k, false);
    for (const auto& mv : info.record.moves) {
      if (mv.edge_event) snap.edge_event[mv.robot] = true;
    }
    auto violations = check_anchor_invariants(snap);
    for (auto& v : violations) {
      const bool activity = v.rfind("shallow-activity", 0) == 0 ||
                            v.rfind("deep-activity", 0) == 0;
      if (activity && info.record.phase == TracePhase::rebalance) continue;  // suspended
      outcome.violations.push_back("round " + std::to_string(info.round) + ": " + v);
    }
  };
  outcome.trace = run(tree, algo, k, opts);
  return outcome;
}

}  // namespace cotex
