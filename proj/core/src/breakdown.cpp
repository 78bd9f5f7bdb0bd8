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

#include "cotex/breakdown.hpp"

#include <bit>
#include <cmath>

#include "cotex/bfdn.hpp"
#include "cotex/bounds.hpp"

namespace cotex {

BreakdownReport run_with_breakdowns(const World& tree, int k, MobilityMask& mask) {
  if (!tree.is_tree()) throw std::invalid_argument("run_with_breakdowns expects a tree");
  BreakdownReport report;
  report.mobility_threshold = breakdown_bound(tree.node_count(), tree.depth(), k);

  BfdnAlgorithm algo;
  RunOptions opts;
  opts.mask = &mask;
  opts.throw_on_round_limit = false;
  // The permitted-move budget accrues at most one unit per robot per round;
  // 20x covers sparse masks and k x covers a single free robot.
  const double budget = report.mobility_threshold * std::max(k, 20) + 64;
  opts.round_limit = static_cast<long long>(std::ceil(budget));
  report.trace = run(tree, algo, k, opts);

  long long bits = 0;
  const double needed = report.mobility_threshold * k;
  for (const auto& r : report.trace.rounds) {
    bits += std::popcount(r.movable);
    if (static_cast<double>(bits) >= needed - 1e-9) {
      report.threshold_round = r.round;
      break;
    }
  }
  report.completion_round = report.trace.summary.completion_round;

  if (report.completion_round >= 0 &&
      (report.threshold_round < 0 || report.completion_round <= report.threshold_round)) {
    report.complete_in_time = true;
  } else if (report.threshold_round < 0) {
    report.detail = "mobility budget never reached within " +
                    std::to_string(report.trace.summary.rounds_executed) + " rounds";
  } else {
    report.detail = "edges still unexplored at round " + std::to_string(report.threshold_round);
  }
  return report;
}

}  // namespace cotex
