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

#include "cotex/bfdn.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace cotex {

BfdnUnit::BfdnUnit(Config cfg) : cfg_(std::move(cfg)) {
  std::sort(cfg_.robots.begin(), cfg_.robots.end());
  states_.resize(cfg_.robots.size());
  for (int i = 0; i < static_cast<int>(cfg_.robots.size()); ++i)
    robot_index_[cfg_.robots[i]] = i;
}

BfdnUnit::RobotState& BfdnUnit::state(int robot) {
  return states_[robot_index_.at(robot)];
}

const BfdnUnit::RobotState& BfdnUnit::state(int robot) const {
  return states_[robot_index_.at(robot)];
}

bool BfdnUnit::in_scope(NodeId v) const {
  if (v == cfg_.scope_root) return true;
  if (cfg_.scope_root == view_->root()) return true;
  auto it = scope_memo_.find(v);
  if (it != scope_memo_.end()) return it->second;
  bool res = false;
  if (view_->depth_of(v) > cfg_.base_depth) {
    NodeId x = v;
    for (int d = view_->depth_of(v); d > cfg_.base_depth; --d) x = view_->parent_of(x);
    res = x == cfg_.scope_root;
  }
  scope_memo_[v] = res;
  return res;
}

int BfdnUnit::rel_depth(NodeId v) const { return view_->depth_of(v) - cfg_.base_depth; }

bool BfdnUnit::open_within_cap() const {
  if (open_rel_.empty()) return false;
  return cfg_.depth_cap < 0 || open_rel_.begin()->first <= cfg_.depth_cap;
}

const std::set<NodeId>* BfdnUnit::candidates() const {
  if (!open_within_cap()) return nullptr;
  return &open_rel_.begin()->second;
}

void BfdnUnit::set_anchor(int robot, NodeId v) {
  auto& rs = state(robot);
  if (rs.anchor != kNoNode) {
    auto it = anchor_count_.find(rs.anchor);
    if (it != anchor_count_.end() && --it->second == 0) anchor_count_.erase(it);
  }
  rs.anchor = v;
  if (v != kNoNode) ++anchor_count_[v];
}

void BfdnUnit::begin(const ExplorationView& view, const std::vector<NodeId>& positions,
                     const std::vector<NodeId>& previous_anchors) {
  view_ = &view;
  open_rel_.clear();
  anchor_count_.clear();
  scope_memo_.clear();
  for (const auto& [depth, nodes] : view.open_by_depth()) {
    for (NodeId v : nodes) {
      if (in_scope(v)) open_rel_[depth - cfg_.base_depth].insert(v);
    }
  }
  for (int i = 0; i < static_cast<int>(cfg_.robots.size()); ++i) {
    auto& rs = states_[i];
    rs = RobotState{};
    const int robot = cfg_.robots[i];
    const NodeId u = positions[robot];
    if (u == cfg_.scope_root) {
      rs.anchor = cfg_.scope_root;
    } else if (robot < static_cast<int>(previous_anchors.size()) &&
               previous_anchors[robot] != kNoNode) {
      rs.anchor = previous_anchors[robot];
    } else {
      // Adopt a robot mid-flight: anchor at the shallowest open node on its
      // path to the scope root, or at its own position on a clean path.
      std::vector<NodeId> path{u};
      while (path.back() != cfg_.scope_root) path.push_back(view.parent_of(path.back()));
      NodeId shallow_open = kNoNode;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (view.node_open(*it)) {
          shallow_open = *it;
          break;
        }
      }
      rs.anchor = shallow_open != kNoNode ? shallow_open : u;
    }
    ++anchor_count_[rs.anchor];
  }
}

void BfdnUnit::load_stack(RobotState& rs, NodeId target) {
  rs.stack.clear();
  NodeId x = target;
  while (x != cfg_.scope_root) {
    rs.stack.push_back(view_->parent_edge_of(x));
    x = view_->parent_of(x);
  }
}

void BfdnUnit::sink_anchor(int robot, NodeId u) {
  auto& rs = state(robot);
  if (rs.anchor == kNoNode || !view_->discovered(u)) return;
  const int min_open = open_rel_.empty() ? INT_MAX : open_rel_.begin()->first;
  int ad = rel_depth(rs.anchor);
  const int du = rel_depth(u);
  if (du <= ad || min_open <= ad || ad >= cfg_.depth_cap) return;
  // Nodes on the path strictly below the anchor, indexed by relative depth.
  std::vector<NodeId> below(du - ad);
  NodeId x = u;
  for (int d = du; d > ad; --d) {
    below[d - ad - 1] = x;
    x = view_->parent_of(x);
  }
  if (x != rs.anchor) return;  // anchor not an ancestor of the position
  NodeId cur = rs.anchor;
  while (ad < cfg_.depth_cap && ad < du && min_open > ad) {
    cur = below[ad - rel_depth(rs.anchor)];
    ++ad;
  }
  if (cur != rs.anchor) set_anchor(robot, cur);
}

NodeId BfdnUnit::reanchor_choice(int) const {
  const std::set<NodeId>* cands = candidates();
  if (cands == nullptr) return kNoNode;
  NodeId best = kNoNode;
  int best_count = INT_MAX;
  for (NodeId v : *cands) {
    auto it = anchor_count_.find(v);
    const int c = it == anchor_count_.end() ? 0 : it->second;
    if (c < best_count) {  // ties stay with the smallest node id
      best_count = c;
      best = v;
    }
  }
  return best;
}

void BfdnUnit::set_anchor_for_test(int robot, NodeId v) { set_anchor(robot, v); }

void BfdnUnit::select(RoundContext& ctx) {
  const ExplorationView& view = ctx.view();
  view_ = &view;
  const auto& pos = ctx.positions();

  if (cfg_.activity && cfg_.depth_cap >= 0) {
    for (int r : cfg_.robots) {
      if (state(r).active) sink_anchor(r, pos[r]);
    }
  }
  const bool swept = cfg_.activity && !open_within_cap();

  for (int r : cfg_.robots) {
    if (!ctx.movable(r)) continue;
    auto& rs = state(r);
    const NodeId u = pos[r];

    if (!rs.active) {
      if (u != cfg_.scope_root) ctx.select_up(r);
      continue;  // waits at the scope root
    }

    if (u == cfg_.scope_root) {
      const NodeId v = reanchor_choice(r);
      if (v == kNoNode) {
        set_anchor(r, cfg_.scope_root);
        ctx.note_anchor(r, cfg_.scope_root, cfg_.base_depth);
        if (cfg_.activity) {
          rs.active = false;
          continue;
        }
      } else {
        set_anchor(r, v);
        ctx.note_anchor(r, v, cfg_.base_depth + rel_depth(v));
        load_stack(rs, v);
      }
    } else if (swept && (cfg_.depth_cap < 0 || rel_depth(u) <= cfg_.depth_cap)) {
      // Nothing dangles within the cap anymore: this robot's band is done.
      rs.active = false;
      rs.stack.clear();
      ctx.select_up(r);
      continue;
    }

    if (!rs.stack.empty()) {
      const EdgeId e = rs.stack.back();
      rs.stack.pop_back();
      ctx.select_edge(r, e);
      continue;
    }

    EdgeId pick = kNoEdge;
    for (EdgeId e : view.ports_of(u)) {
      if (view.dangling(e) && !ctx.edge_taken(e)) {
        pick = e;
        break;
      }
    }
    if (pick != kNoEdge) {
      ctx.select_edge(r, pick);
    } else if (u != cfg_.scope_root) {
      ctx.select_up(r);
    }
    // At the scope root with nothing to take: stays put.
  }
}

void BfdnUnit::sync_open(NodeId v) {
  const int rel = rel_depth(v);
  if (view_->node_open(v)) {
    open_rel_[rel].insert(v);
  } else {
    auto it = open_rel_.find(rel);
    if (it != open_rel_.end()) {
      it->second.erase(v);
      if (it->second.empty()) open_rel_.erase(it);
    }
  }
}

void BfdnUnit::after_round(const AfterRound& info) {
  view_ = &info.view;
  auto touch = [&](NodeId v) {
    if (v != kNoNode && view_->discovered(v) && view_->depth_of(v) >= cfg_.base_depth &&
        in_scope(v))
      sync_open(v);
  };
  for (const auto& mv : info.moves) {
    touch(mv.from);
    if (view_->discovered(mv.to)) touch(mv.to);
  }
  for (EdgeId e : info.discovered) {
    const NodeId known = view_->discovered_endpoint(e);
    touch(known);
    const NodeId other = view_->world().other_end(e, known);
    if (view_->discovered(other)) touch(other);
  }
}

int BfdnUnit::active_count() const {
  int n = 0;
  for (const auto& rs : states_)
    if (rs.active) ++n;
  return n;
}

bool BfdnUnit::finished() const { return open_rel_.empty() && active_count() == 0; }

void BfdnUnit::fill_report(AnchorReport& rep) const {
  for (int i = 0; i < static_cast<int>(cfg_.robots.size()); ++i) {
    const int r = cfg_.robots[i];
    rep.anchor[r] = states_[i].anchor;
    rep.active[r] = states_[i].active;
  }
}

BfdnAlgorithm::BfdnAlgorithm(int depth_cap, bool activity)
    : depth_cap_(depth_cap), activity_(activity) {}

std::string BfdnAlgorithm::name() const {
  if (depth_cap_ < 0) return "bfdn";
  return "bfdn1:" + std::to_string(depth_cap_);
}

void BfdnAlgorithm::begin(const ExplorationView& view, int k) {
  k_ = k;
  BfdnUnit::Config cfg;
  cfg.scope_root = view.root();
  cfg.base_depth = 0;
  cfg.depth_cap = depth_cap_;
  cfg.activity = activity_;
  cfg.robots.resize(k);
  std::iota(cfg.robots.begin(), cfg.robots.end(), 0);
  unit_ = std::make_unique<BfdnUnit>(std::move(cfg));
  std::vector<NodeId> positions(k, view.root());
  unit_->begin(view, positions);
}

void BfdnAlgorithm::select(RoundContext& ctx) {
  unit_->select(ctx);
  if (activity_) {
    ctx.note_active(unit_->active_count());
    ctx.note_phase(unit_->swept_within_cap() ? TracePhase::deep : TracePhase::shallow);
  }
}

void BfdnAlgorithm::after_round(const AfterRound& info) { unit_->after_round(info); }

AnchorReport BfdnAlgorithm::anchor_report() const {
  AnchorReport rep;
  rep.anchor.assign(k_, kNoNode);
  rep.active.assign(k_, false);
  rep.depth_budget = depth_cap_;
  unit_->fill_report(rep);
  return rep;
}

}  // namespace cotex
