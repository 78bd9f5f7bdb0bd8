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

#ifndef COTEX_BREAKDOWN_HPP_
#define COTEX_BREAKDOWN_HPP_

#include "cotex/engine.hpp"
#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

struct BreakdownReport {
  RunTrace trace;
  double mobility_threshold = 0.0;  // 2n/k + D^2(ln k + 2)
  long long threshold_round = -1;   // first round with that much average mobility
  long long completion_round = -1;
  bool complete_in_time = false;
  std::string detail;
};

/// Runs the exploration under an adversarial mobility mask (only permitted
/// robots enter the selection loop) and checks that by the first round where
/// the average permitted moves per robot reach 2n/k + D^2(ln k + 2), every
/// edge of the tree has been traversed.
BreakdownReport run_with_breakdowns(const World& tree, int k, MobilityMask& mask);

}  // namespace cotex

#endif  // COTEX_BREAKDOWN_HPP_
