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

#ifndef COTEX_AUDIT_HPP_
#define COTEX_AUDIT_HPP_

#include <string>
#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/trace.hpp"
#include "cotex/view.hpp"
#include "cotex/world.hpp"

namespace cotex {

struct AuditViolation {
  std::string check;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  long long idle_rounds = 0;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Post-run consistency checks on a recorded trace:
///   idle-rounds            rounds where a movable robot stood still <= D+1
///                          (before completion when mobility was restricted)
///   unique-first-traversal every dangling edge first crossed by one robot
///   excursion-balance      a trip anchored at depth d lasting T moves
///                          explores exactly (T-2d)/2 dangling edges
///   return-to-root         full-mobility tree runs park every robot at root
///   edge-events            at most 2(n-1) tree edge events
///   conservation           moves plus idle slots add up to k * runtime
///   reanchor-depth-cap     per-depth anchor reassignments within bound
AuditReport audit_trace(const RunTrace& trace, const World& world);

/// Every open node must lie in the subtree of some active robot's anchor.
/// Returns one message per uncovered open node.
std::vector<std::string> check_dangling_coverage(const ExplorationView& view,
                                                 const AnchorReport& anchors);

/// Whenever all anchors sit at depth <= d-1, a discovered node at depth d
/// with an unfinished subtree hosts exactly one robot.
std::vector<std::string> check_exclusive_host(const ExplorationView& view,
                                              const AnchorReport& anchors,
                                              const std::vector<NodeId>& positions);

}  // namespace cotex

#endif  // COTEX_AUDIT_HPP_
