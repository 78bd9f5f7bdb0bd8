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

#include "cotex/trace_io.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cotex/view.hpp"

namespace cotex {

namespace {

using nlohmann::json;

const char* phase_name(TracePhase p) {
  switch (p) {
    case TracePhase::shallow:
      return "shallow";
    case TracePhase::deep:
      return "deep";
    case TracePhase::rebalance:
      return "rebalance";
    default:
      return "";
  }
}

TracePhase phase_from(const std::string& s) {
  if (s == "shallow") return TracePhase::shallow;
  if (s == "deep") return TracePhase::deep;
  if (s == "rebalance") return TracePhase::rebalance;
  return TracePhase::none;
}

}  // namespace

void write_trace_jsonl(const RunTrace& trace, std::ostream& out) {
  for (const auto& rec : trace.rounds) {
    json j;
    j["round"] = rec.round;
    json moves = json::array();
    for (const auto& mv : rec.moves) {
      moves.push_back({{"robot", mv.robot},
                       {"from", mv.from},
                       {"to", mv.to},
                       {"edge", mv.edge}});
    }
    j["moves"] = std::move(moves);
    j["discovered"] = rec.discovered;
    j["idle"] = rec.idle;
    j["movable"] = rec.movable;
    if (!rec.anchors.empty()) {
      json anchors = json::array();
      for (const auto& ev : rec.anchors)
        anchors.push_back({{"robot", ev.robot}, {"node", ev.node}, {"depth", ev.depth}});
      j["anchors"] = std::move(anchors);
    }
    if (rec.phase != TracePhase::none) j["phase"] = phase_name(rec.phase);
    if (rec.active_count >= 0) j["active"] = rec.active_count;
    if (rec.stage >= 0) j["stage"] = rec.stage;
    out << j.dump() << "\n";
  }
}

std::vector<RoundRecord> read_trace_jsonl(std::istream& in) {
  std::vector<RoundRecord> rounds;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    RoundRecord rec;
    rec.round = j.at("round").get<long long>();
    for (const auto& m : j.at("moves")) {
      MoveRecord mv;
      mv.robot = m.at("robot").get<int>();
      mv.from = m.at("from").get<NodeId>();
      mv.to = m.at("to").get<NodeId>();
      mv.edge = m.at("edge").get<EdgeId>();
      rec.moves.push_back(mv);
    }
    rec.discovered = j.at("discovered").get<std::vector<EdgeId>>();
    rec.idle = j.at("idle").get<std::vector<int>>();
    if (j.contains("movable")) rec.movable = j.at("movable").get<std::uint64_t>();
    if (j.contains("anchors")) {
      for (const auto& a : j.at("anchors")) {
        rec.anchors.push_back(AnchorEvent{a.at("robot").get<int>(), a.at("node").get<NodeId>(),
                                          a.at("depth").get<int>()});
      }
    }
    if (j.contains("phase")) rec.phase = phase_from(j.at("phase").get<std::string>());
    if (j.contains("active")) rec.active_count = j.at("active").get<int>();
    if (j.contains("stage")) rec.stage = j.at("stage").get<int>();
    rounds.push_back(std::move(rec));
  }
  return rounds;
}

RunTrace rebuild_trace(const World& world, int k, std::vector<RoundRecord> rounds,
                       const std::string& algorithm) {
  RunTrace trace;
  trace.summary.algorithm = algorithm;
  trace.summary.k = k;
  trace.summary.nodes = world.node_count();
  trace.summary.edges = world.edge_count();
  trace.summary.depth = world.depth();
  trace.summary.max_degree = world.max_degree();
  trace.summary.tree = world.is_tree();
  trace.summary.robot_moves.assign(k, 0);
  trace.summary.finishes_at_root =
      algorithm == "bfdn" || algorithm == "dfs" || algorithm == "planner";

  ExplorationView view(world);
  view.reveal_root();

  std::vector<NodeId> positions(k, world.root);
  std::vector<bool> up_done(world.edge_count(), false);
  struct Exc {
    bool open = false;
    Excursion rec;
  };
  std::vector<Exc> exc(k);
  std::vector<int> last_depth(k, 0);
  bool anchors_seen = false;
  bool full_mobility = true;

  for (auto& rec : rounds) {
    rec.edge_events = 0;
    if (std::popcount(rec.movable) < k) full_mobility = false;
    trace.summary.movable_bits += std::popcount(rec.movable);
    std::vector<int> anchored(k, -1);
    for (const auto& ev : rec.anchors) {
      anchors_seen = true;
      anchored[ev.robot] = ev.depth;
      last_depth[ev.robot] = ev.depth;
      if (ev.depth >= 1) ++trace.summary.reanchors_by_depth[ev.depth];
    }
    for (auto& mv : rec.moves) {
      mv.was_dangling = view.status(mv.edge) == EdgeStatus::dangling;
      if (mv.was_dangling) {
        bool adopt = true;
        if (!world.is_tree())
          adopt = !view.discovered(mv.to) && world.dist[mv.to] == world.dist[mv.from] + 1;
        if (adopt) {
          view.arrive(mv.to, mv.edge);
          mv.edge_event = true;
        } else {
          view.close(mv.edge);
          ++trace.summary.closed_traversals[mv.edge];
        }
      } else if (view.status(mv.edge) == EdgeStatus::closed) {
        ++trace.summary.closed_traversals[mv.edge];
      } else if (view.parent_of(mv.from) == mv.to) {
        view.mark_finished_port(mv.to, world.port_of(mv.to, mv.edge));
        if (!up_done[mv.edge]) {
          up_done[mv.edge] = true;
          mv.edge_event = true;
        }
      }
      if (mv.edge_event) ++rec.edge_events;
      ++trace.summary.robot_moves[mv.robot];

      if (anchors_seen) {
        auto& e = exc[mv.robot];
        if (!e.open && mv.from == world.root) {
          e.open = true;
          e.rec = Excursion{};
          e.rec.robot = mv.robot;
          e.rec.anchor_depth =
              anchored[mv.robot] >= 0 ? anchored[mv.robot] : last_depth[mv.robot];
        }
        if (e.open) {
          ++e.rec.moves;
          if (mv.was_dangling) ++e.rec.dangling_explored;
        }
      }
      positions[mv.robot] = mv.to;
    }
    for (int i = 0; i < k; ++i) {
      if (exc[i].open && positions[i] == world.root) {
        trace.summary.excursions.push_back(exc[i].rec);
        exc[i].open = false;
      }
    }
    trace.summary.edge_events += rec.edge_events;
    trace.summary.rounds_executed = rec.round;
    if (!rec.moves.empty()) {
      ++trace.summary.runtime;
      if (!rec.idle.empty()) ++trace.summary.partial_idle_rounds;
    }
    if (trace.summary.completion_round < 0 && view.fully_explored()) {
      trace.summary.completion_round = rec.round;
      trace.summary.complete = true;
    }
  }
  trace.summary.excursions_tracked = anchors_seen;
  trace.summary.full_mobility = full_mobility;
  trace.summary.final_positions = positions;
  trace.rounds = std::move(rounds);
  return trace;
}

std::string summary_csv_header() {
  return "n,D,Delta,k,algorithm,seed,runtime,edge_events,bound,bound_ok";
}

std::string summary_csv_row(const RunSummary& summary, double bound, bool bound_ok) {
  std::ostringstream out;
  out << summary.nodes << "," << summary.depth << "," << summary.max_degree << "," << summary.k
      << "," << summary.algorithm << "," << summary.seed << "," << summary.runtime << ","
      << summary.edge_events << "," << bound << "," << (bound_ok ? 1 : 0);
  return out.str();
}

}  // namespace cotex
