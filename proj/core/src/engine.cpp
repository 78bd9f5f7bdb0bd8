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

#include "cotex/engine.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <map>

namespace cotex {

RoundContext::RoundContext(long long round, const ExplorationView& view,
                           const std::vector<NodeId>& positions, std::uint64_t movable)
    : round_(round), view_(view), positions_(positions), movable_(movable) {
  selections_.assign(positions.size(), Selection{});
}

void RoundContext::check_robot(int robot) const {
  if (robot < 0 || robot >= k())
    throw std::logic_error("selection for robot out of range");
  if (!movable(robot))
    throw std::logic_error("selection issued for a robot that may not move");
}

void RoundContext::select_edge(int robot, EdgeId e) {
  check_robot(robot);
  const EdgeStatus st = view_.status(e);
  if (st == EdgeStatus::undiscovered)
    throw std::logic_error("illegal selection: undiscovered edge");
  if (st == EdgeStatus::closed)
    throw std::logic_error("illegal selection: closed edge");
  const auto& ab = view_.world().edge_nodes[e];
  if (ab[0] != positions_[robot] && ab[1] != positions_[robot])
    throw std::logic_error("illegal selection: edge " + std::to_string(e) +
                           " not incident to robot " + std::to_string(robot));
  if (st == EdgeStatus::dangling && !taken_.insert(e).second)
    throw std::logic_error("two robots selected dangling edge " + std::to_string(e));
  if (st != EdgeStatus::dangling) taken_.insert(e);
  selections_[robot] = Selection{Selection::Kind::edge, e};
}

void RoundContext::select_up(int robot) {
  check_robot(robot);
  selections_[robot] = Selection{Selection::Kind::up, kNoEdge};
}

void RoundContext::select_stay(int robot) {
  check_robot(robot);
  selections_[robot] = Selection{Selection::Kind::stay, kNoEdge};
}

void RoundContext::note_anchor(int robot, NodeId node, int depth) {
  anchors_.push_back(AnchorEvent{robot, node, depth});
}

bool BernoulliMask::allowed(long long round, int robot) const {
  std::uint64_t z = seed_ ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(round)) ^
                    (0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(robot + 1));
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z) * 0x1.0p-64 < p_;
}

std::string BernoulliMask::name() const {
  return "bernoulli:" + std::to_string(p_);
}

MatrixMask load_mask_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mask file " + path);
  std::vector<std::uint64_t> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::uint64_t row = 0;
    for (int i = 0; i < k && i < static_cast<int>(line.size()); ++i) {
      if (line[i] == '1') row |= (1ull << i);
    }
    rows.push_back(row);
  }
  return MatrixMask(std::move(rows), "file:" + path);
}

void BlockHeaviestAnchorMask::observe(long long, const std::vector<NodeId>& positions,
                                      const AnchorReport* anchors) {
  blocked_ = 0;
  if (anchors == nullptr) return;
  if (target_ == kNoNode) {
    std::map<NodeId, int> load;
    for (std::size_t i = 0; i < anchors->anchor.size(); ++i) {
      NodeId a = anchors->anchor[i];
      if (a != kNoNode && std::find(released_.begin(), released_.end(), a) == released_.end())
        ++load[a];
    }
    int best = 0;
    for (const auto& [node, count] : load) {
      if (node != kNoNode && count > best) {
        best = count;
        target_ = node;
      }
    }
  }
  if (target_ == kNoNode) return;
  std::uint64_t mask = 0;
  int present = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] == target_) {
      mask |= (1ull << i);
      ++present;
    }
  }
  if (present == static_cast<int>(positions.size())) {
    released_.push_back(target_);
    target_ = kNoNode;
    return;
  }
  blocked_ = mask;
}

bool BlockHeaviestAnchorMask::allowed(long long, int robot) const {
  return ((blocked_ >> robot) & 1) == 0;
}

double mean_mobility(const MobilityMask& mask, long long up_to_round, int k) {
  long long bits = 0;
  for (long long t = 1; t <= up_to_round; ++t)
    for (int i = 0; i < k; ++i)
      if (mask.allowed(t, i)) ++bits;
  return static_cast<double>(bits) / static_cast<double>(k);
}

double mean_mobility(const RunTrace& trace, long long up_to_round) {
  long long bits = 0;
  for (const auto& r : trace.rounds) {
    if (r.round > up_to_round) break;
    bits += std::popcount(r.movable);
  }
  return static_cast<double>(bits) / static_cast<double>(trace.summary.k);
}

namespace {

struct ExcursionState {
  bool open = false;
  Excursion record;
};

}  // namespace

RunTrace run(const World& world, ExplorationAlgorithm& algorithm, int k,
             const RunOptions& options) {
  if (k < 1 || k > 64) throw std::invalid_argument("run: k must be in 1..64");

  ExplorationView view(world);
  view.reveal_root();

  std::vector<NodeId> positions(k, world.root);
  std::vector<EdgeId> pending_return(k, kNoEdge);

  RunTrace trace;
  auto& sum = trace.summary;
  sum.algorithm = algorithm.name();
  sum.k = k;
  sum.nodes = world.node_count();
  sum.edges = world.edge_count();
  sum.depth = world.depth();
  sum.max_degree = world.max_degree();
  sum.tree = world.is_tree();
  sum.seed = options.seed;
  sum.finishes_at_root = algorithm.finishes_at_root();
  sum.full_mobility = options.mask == nullptr;
  sum.robot_moves.assign(k, 0);

  long long limit = options.round_limit;
  if (limit <= 0) {
    const double base = 2.0 * static_cast<double>(std::max(sum.nodes, sum.edges)) / k +
                        static_cast<double>(sum.depth) * sum.depth * (std::log(static_cast<double>(k)) + 2.0);
    limit = static_cast<long long>(std::ceil(10.0 * base)) + 64;
  }

  auto* reporter = dynamic_cast<AnchorReporting*>(&algorithm);
  algorithm.begin(view, k);

  std::vector<bool> down_done(world.edge_count(), false);
  std::vector<bool> up_done(world.edge_count(), false);
  std::vector<ExcursionState> excursions(k);
  std::vector<int> last_anchor_depth(k, 0);
  bool anchors_seen = false;

  if (view.fully_explored()) {
    sum.completion_round = 0;
    sum.complete = true;
  }

  for (long long round = 1;; ++round) {
    if (round > limit) {
      sum.hit_round_limit = true;
      if (options.throw_on_round_limit)
        throw RoundLimitError("round limit " + std::to_string(limit) + " exceeded by " +
                              algorithm.name());
      break;
    }

    AnchorReport report;
    if (options.mask != nullptr) {
      if (reporter != nullptr) report = reporter->anchor_report();
      options.mask->observe(round, positions, reporter != nullptr ? &report : nullptr);
    }
    std::uint64_t movable = 0;
    for (int i = 0; i < k; ++i) {
      if (options.mask == nullptr || options.mask->allowed(round, i))
        movable |= (1ull << i);
    }
    sum.movable_bits += std::popcount(movable);

    // Robots owing a backtrack move are handled by the engine, not queried.
    std::uint64_t forced = 0;
    for (int i = 0; i < k; ++i) {
      if (pending_return[i] != kNoEdge && ((movable >> i) & 1)) forced |= (1ull << i);
    }

    RoundContext ctx(round, view, positions, movable & ~forced);
    algorithm.select(ctx);

    RoundRecord rec;
    rec.round = round;
    rec.movable = movable;
    rec.phase = ctx.phase();
    rec.active_count = ctx.active_count();
    rec.stage = ctx.stage();
    rec.anchors = ctx.anchor_events();

    for (const auto& ev : rec.anchors) {
      anchors_seen = true;
      last_anchor_depth[ev.robot] = ev.depth;
      if (ev.depth >= 1) ++sum.reanchors_by_depth[ev.depth];
    }

    // Build the move list from the pre-move view.
    std::vector<NodeId> next = positions;
    for (int i = 0; i < k; ++i) {
      EdgeId crossed = kNoEdge;
      if ((forced >> i) & 1) {
        crossed = pending_return[i];
      } else if ((movable >> i) & 1) {
        const Selection& sel = ctx.selection(i);
        if (sel.kind == Selection::Kind::edge) {
          crossed = sel.edge;
        } else if (sel.kind == Selection::Kind::up && positions[i] != world.root) {
          crossed = view.parent_edge_of(positions[i]);
        }
      }
      if (crossed == kNoEdge) continue;
      MoveRecord mv;
      mv.robot = i;
      mv.from = positions[i];
      mv.edge = crossed;
      mv.to = world.other_end(crossed, positions[i]);
      mv.was_dangling = view.status(crossed) == EdgeStatus::dangling;
      next[i] = mv.to;
      rec.moves.push_back(mv);
    }

    // Apply arrivals in robot order; lower index wins simultaneous discovery.
    for (auto& mv : rec.moves) {
      if ((forced >> mv.robot) & 1) {
        ++sum.closed_traversals[mv.edge];
        pending_return[mv.robot] = kNoEdge;
        continue;
      }
      if (mv.was_dangling) {
        bool adopt = true;
        if (!world.is_tree()) {
          adopt = !view.discovered(mv.to) && world.dist[mv.to] == world.dist[mv.from] + 1;
        } else if (view.discovered(mv.to)) {
          throw std::logic_error("tree invariant broken: dangling edge into a discovered node");
        }
        if (adopt) {
          auto fresh = view.arrive(mv.to, mv.edge);
          rec.discovered.insert(rec.discovered.end(), fresh.begin(), fresh.end());
          mv.edge_event = true;  // first parent-to-child traversal
          down_done[mv.edge] = true;
        } else {
          view.close(mv.edge);
          ++sum.closed_traversals[mv.edge];
          pending_return[mv.robot] = mv.edge;
        }
      } else {
        // Traversed edge: classify by discovery-tree direction.
        if (view.parent_of(mv.to) == mv.from) {
          if (!down_done[mv.edge]) {
            down_done[mv.edge] = true;
            mv.edge_event = true;
          }
        } else if (view.parent_of(mv.from) == mv.to) {
          view.mark_finished_port(mv.to, world.port_of(mv.to, mv.edge));
          if (!up_done[mv.edge]) {
            up_done[mv.edge] = true;
            mv.edge_event = true;
          }
        }
      }
      if (mv.edge_event) ++rec.edge_events;
    }

    bool any_move = false;
    for (const auto& mv : rec.moves) {
      any_move = true;
      ++sum.robot_moves[mv.robot];
      positions[mv.robot] = next[mv.robot];
    }
    for (int i = 0; i < k; ++i) {
      if (((movable >> i) & 1)) {
        bool moved = false;
        for (const auto& mv : rec.moves)
          if (mv.robot == i) { moved = true; break; }
        if (!moved) rec.idle.push_back(i);
      }
    }

    sum.edge_events += rec.edge_events;
    sum.rounds_executed = round;
    if (any_move) {
      ++sum.runtime;
      if (!rec.idle.empty()) ++sum.partial_idle_rounds;
    }

    // Excursion bookkeeping (anchor-driven algorithms only).
    if (anchors_seen) {
      std::vector<int> anchored_depth(k, -1);
      for (const auto& ev : rec.anchors) anchored_depth[ev.robot] = ev.depth;
      for (const auto& mv : rec.moves) {
        auto& ex = excursions[mv.robot];
        if (!ex.open && mv.from == world.root) {
          ex.open = true;
          ex.record = Excursion{};
          ex.record.robot = mv.robot;
          ex.record.anchor_depth = anchored_depth[mv.robot] >= 0
                                       ? anchored_depth[mv.robot]
                                       : last_anchor_depth[mv.robot];
        }
        if (ex.open) {
          ++ex.record.moves;
          if (mv.was_dangling) ++ex.record.dangling_explored;
        }
      }
      for (int i = 0; i < k; ++i) {
        if (excursions[i].open && positions[i] == world.root) {
          sum.excursions.push_back(excursions[i].record);
          excursions[i].open = false;
        }
      }
    }

    if (sum.completion_round < 0 && view.fully_explored()) {
      sum.completion_round = round;
      sum.complete = true;
    }

    trace.rounds.push_back(std::move(rec));
    const RoundRecord& stored = trace.rounds.back();
    AfterRound after{round, view, positions, stored.moves, stored.discovered};
    algorithm.after_round(after);
    if (options.round_hook) {
      RoundInfo info{round, view, positions, stored, algorithm};
      options.round_hook(info);
    }

    if (movable != 0 && !any_move) break;
  }

  sum.excursions_tracked = anchors_seen;
  sum.final_positions = positions;
  return trace;
}

}  // namespace cotex
