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

#ifndef COTEX_TRACE_IO_HPP_
#define COTEX_TRACE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// One JSON object per round:
///   {"round":t,"moves":[{"robot":r,"from":u,"to":v,"edge":e}],
///    "discovered":[edge ids],"idle":[robot ids]}
/// plus "anchors", "movable", "phase", "active", "stage" when present.
void write_trace_jsonl(const RunTrace& trace, std::ostream& out);
std::vector<RoundRecord> read_trace_jsonl(std::istream& in);

/// Replays round records against the world to recover a full trace: robot
/// positions, edge statuses, runtime, edge events, excursions, completion.
RunTrace rebuild_trace(const World& world, int k, std::vector<RoundRecord> rounds,
                       const std::string& algorithm);

/// `n,D,Delta,k,algorithm,seed,runtime,edge_events,bound,bound_ok`
std::string summary_csv_header();
std::string summary_csv_row(const RunSummary& summary, double bound, bool bound_ok);

}  // namespace cotex

#endif  // COTEX_TRACE_IO_HPP_
