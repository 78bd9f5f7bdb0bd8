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

#include "cotex/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cotex/bounds.hpp"

namespace cotex {

namespace {

int ceil_log2(int x) {
  int bits = 0;
  while ((1 << bits) < x) ++bits;
  return bits;
}

}  // namespace

int PartitionCounters::step(NodeId node, int degree) {
  auto [it, fresh] = next_.try_emplace(node, degree);
  if (it->second >= 2) return it->second--;
  return 1;
}

int PartitionCounters::peek(NodeId node, int degree) const {
  auto it = next_.find(node);
  const int value = it == next_.end() ? degree : it->second;
  return value >= 2 ? value : 1;
}

PlannerBfdn::PlannerBfdn() : factory_(nullptr) {}

PlannerBfdn::PlannerBfdn(SensorFactory factory) : factory_(std::move(factory)) {}

void PlannerBfdn::begin(const ExplorationView& view, int k) {
  view_ = &view;
  k_ = k;
  if (factory_) {
    sensor_ = factory_(view);
  } else {
    sensor_ = std::make_unique<ViewSensor>(view);
  }
  delta_ = view.world().max_degree();
  port_bits_ = ceil_log2(std::max(delta_, 1));

  robots_.assign(k, Robot{});
  partition_ = PartitionCounters{};
  depth_ = 0;
  anchors_ = {PortSeq{}};
  returned_.clear();
  known_.clear();
  load_.clear();
  seq_node_.clear();
  seq_node_[PortSeq{}] = view.root();
  finished_ = false;
}

void PlannerBfdn::account(Robot& r) const {
  const long long bits = static_cast<long long>(r.stack.size()) * port_bits_ +
                         (r.bitmap.empty() ? 0 : delta_);
  r.peak_bits = std::max(r.peak_bits, bits);
}

std::vector<int> PlannerBfdn::child_ports(const PortSeq& seq,
                                          const std::vector<bool>& known) const {
  std::vector<int> out;
  const int first = seq.empty() ? 1 : 2;
  for (int j = first; j <= delta_; ++j) {
    if (j >= static_cast<int>(known.size()) || !known[j]) out.push_back(j);
  }
  return out;
}

void PlannerBfdn::process_reports(const std::vector<int>& returning) {
  for (int id : returning) {
    Robot& r = robots_[id];
    if (!r.pending_report) continue;
    auto& known = known_[r.anchor];
    if (known.empty()) known.assign(delta_ + 1, false);
    for (int j = 1; j <= delta_; ++j) {
      if (r.bitmap[j]) known[j] = true;
    }
    if (anchors_.count(r.anchor)) returned_.insert(r.anchor);
    // Finished ports of the anchor close out the matching children.
    for (int j = 1; j <= delta_; ++j) {
      if (!r.bitmap[j]) continue;
      PortSeq child = r.anchor;
      child.push_back(j);
      if (anchors_.count(child)) returned_.insert(child);
    }
    auto it = load_.find(r.anchor);
    if (it != load_.end() && --it->second <= 0) load_.erase(it);
    r.assigned = false;
    r.pending_report = false;
    r.anchor.clear();
    r.anchor_node = kNoNode;
  }
}

void PlannerBfdn::promote_if_exhausted() {
  while (!finished_) {
    bool eligible = false;
    for (const auto& a : anchors_) {
      if (!returned_.count(a)) {
        eligible = true;
        break;
      }
    }
    if (eligible) return;
    std::set<PortSeq> next;
    for (const auto& a : anchors_) {
      auto it = known_.find(a);
      if (it == known_.end()) continue;  // never reported: cannot happen once in R
      for (int j : child_ports(a, it->second)) {
        PortSeq child = a;
        child.push_back(j);
        next.insert(std::move(child));
      }
    }
    if (next.empty()) {
      finished_ = true;  // returning robots simply wait at the root now
      return;
    }
    anchors_ = std::move(next);
    returned_.clear();
    ++depth_;
  }
}

void PlannerBfdn::assign(int robot_id, Robot& r) {
  const PortSeq* best = nullptr;
  int best_load = 0;
  for (const auto& a : anchors_) {
    if (returned_.count(a)) continue;
    auto it = load_.find(a);
    const int l = it == load_.end() ? 0 : it->second;
    if (best == nullptr || l < best_load) {
      best = &a;
      best_load = l;
    }
  }
  if (best == nullptr) throw std::logic_error("planner: no eligible anchor to assign");
  r.anchor = *best;
  r.stack.assign(r.anchor.rbegin(), r.anchor.rend());
  r.bitmap.assign(delta_ + 1, false);
  r.assigned = true;
  r.mode = r.anchor.empty() ? Robot::Mode::exploring : Robot::Mode::descending;
  auto it = seq_node_.find(r.anchor);
  r.anchor_node = it == seq_node_.end() ? kNoNode : it->second;
  ++load_[r.anchor];
  account(r);
  (void)robot_id;
}

void PlannerBfdn::select(RoundContext& ctx) {
  const auto& pos = ctx.positions();
  const NodeId root = view_->root();

  // Root side: read memories, update the anchor pools, hand out assignments.
  std::vector<int> returning;
  for (int i = 0; i < k_; ++i) {
    if (robots_[i].mode == Robot::Mode::at_root && pos[i] == root) returning.push_back(i);
  }
  process_reports(returning);
  promote_if_exhausted();
  if (!finished_) {
    for (int i : returning) {
      if (!robots_[i].assigned) assign(i, robots_[i]);
    }
  }

  // Robot side: purely local decisions.
  for (int i = 0; i < k_; ++i) {
    if (!ctx.movable(i)) continue;
    Robot& r = robots_[i];
    const NodeId u = pos[i];
    switch (r.mode) {
      case Robot::Mode::at_root:
        break;  // waits for an assignment (or for the others, when finished)
      case Robot::Mode::descending: {
        const int port = r.stack.back();
        const EdgeId e = sensor_->edge_at_port(i, u, port);
        if (view_->dangling(e) && ctx.edge_taken(e)) break;  // a teammate opens it this round
        r.stack.pop_back();
        account(r);
        ctx.select_edge(i, e);
        if (r.stack.empty()) r.mode = Robot::Mode::exploring;
        break;
      }
      case Robot::Mode::exploring: {
        const int deg = sensor_->degree(i, u);
        if (r.stack.empty()) {
          // At the anchor: refresh the finished-port bitmap. Ports past the
          // real degree read as finished so the planner needs no degree info.
          const std::vector<bool> seen = sensor_->finished_ports(i, u);
          for (int j = 1; j <= delta_; ++j) {
            if (j <= deg ? seen[j] : true) r.bitmap[j] = true;
          }
          r.anchor_node = u;
          seq_node_[r.anchor] = u;
        }
        const int port = partition_.step(u, deg);
        if (port >= 2) {
          const EdgeId e = sensor_->edge_at_port(i, u, port);
          r.stack.push_back(port);
          account(r);
          ctx.select_edge(i, e);
        } else if (!r.stack.empty()) {
          r.stack.pop_back();
          account(r);
          ctx.select_edge(i, sensor_->edge_at_port(i, u, 1));
        } else if (u == root) {
          r.mode = Robot::Mode::at_root;
          r.pending_report = true;  // anchored at the root itself: done already
        } else {
          r.mode = Robot::Mode::returning;
          ctx.select_edge(i, sensor_->edge_at_port(i, u, 1));
        }
        break;
      }
      case Robot::Mode::returning:
        ctx.select_edge(i, sensor_->edge_at_port(i, u, 1));
        break;
    }
  }
}

void PlannerBfdn::after_round(const AfterRound& info) {
  view_ = &info.view;
  const NodeId root = view_->root();
  for (int i = 0; i < k_; ++i) {
    Robot& r = robots_[i];
    if (r.mode == Robot::Mode::returning && info.positions[i] == root) {
      r.mode = Robot::Mode::at_root;
      r.pending_report = true;
    }
  }
}

AnchorReport PlannerBfdn::anchor_report() const {
  AnchorReport rep;
  rep.anchor.assign(k_, kNoNode);
  rep.active.assign(k_, false);
  for (int i = 0; i < k_; ++i) {
    rep.anchor[i] = robots_[i].anchor_node;
    rep.active[i] = robots_[i].assigned;
  }
  return rep;
}

long long PlannerBfdn::memory_peak_bits() const {
  long long peak = 0;
  for (const auto& r : robots_) peak = std::max(peak, r.peak_bits);
  return peak;
}

PlannerRunResult run_planner_bfdn(const World& tree, int k,
                                  PlannerBfdn::SensorFactory factory) {
  if (!tree.is_tree()) throw std::invalid_argument("run_planner_bfdn expects a tree");
  PlannerBfdn algo(std::move(factory));
  PlannerRunResult result;
  result.trace = run(tree, algo, k);

  const long long n = tree.node_count();
  const int depth = tree.depth();
  const int delta = tree.max_degree();
  result.memory_peak_bits = algo.memory_peak_bits();
  result.memory_budget_bits =
      static_cast<long long>(delta) + static_cast<long long>(depth) * ceil_log2(std::max(delta, 1));
  result.runtime_bound = bfdn_bound(n, depth, delta, k);
  result.bound_ok =
      static_cast<double>(result.trace.summary.runtime) <= std::ceil(result.runtime_bound);
  result.memory_ok = result.memory_peak_bits <= result.memory_budget_bits;
  if (!result.bound_ok) {
    throw std::logic_error("planner runtime " + std::to_string(result.trace.summary.runtime) +
                           " breaches the bound " + std::to_string(result.runtime_bound));
  }
  if (!result.memory_ok) {
    throw std::logic_error("planner memory " + std::to_string(result.memory_peak_bits) +
                           " bits over the budget " + std::to_string(result.memory_budget_bits));
  }
  return result;
}

}  // namespace cotex
