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

#include <doctest.h>

#include <sstream>

#include "cotex/bfdn.hpp"
#include "cotex/breakdown.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"
#include "cotex/trace_io.hpp"

using namespace cotex;

TEST_CASE("all-ones mask reduces to the plain run") {
  World tree = gen_random_tree(150, 31);
  BfdnAlgorithm plain;
  RunTrace reference = run(tree, plain, 4);

  AllOnesMask ones;
  BreakdownReport report = run_with_breakdowns(tree, 4, ones);
  CHECK(report.complete_in_time);

  std::ostringstream a, b;
  write_trace_jsonl(reference, a);
  write_trace_jsonl(report.trace, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("blocking all but one robot still completes within budget") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    World tree = gen_random_tree(180, seed);
    const int k = 4;
    MatrixMask solo({1ull}, "solo");  // only robot 0 ever moves
    BreakdownReport report = run_with_breakdowns(tree, k, solo);
    CHECK(report.complete_in_time);
    CHECK(report.completion_round >= 0);
  }
}

TEST_CASE("round robin on a star") {
  World star = build_tree({{0, 1}, {0, 2}, {0, 3}});
  RoundRobinMask rr(3);
  BreakdownReport report = run_with_breakdowns(star, 3, rr);
  CHECK(report.complete_in_time);
  CHECK(report.trace.summary.complete);
}

TEST_CASE("seeded bernoulli masks complete before the mobility budget") {
  for (double p : {0.3, 0.7}) {
    for (std::uint64_t seed : {10ull, 11ull}) {
      World tree = gen_random_tree(250, seed * 7 + 1);
      BernoulliMask mask(p, seed);
      BreakdownReport report = run_with_breakdowns(tree, 5, mask);
      CHECK(report.complete_in_time);
    }
  }
}

TEST_CASE("a blocked robot never moves") {
  World tree = gen_random_tree(120, 9);
  const int k = 3;
  BernoulliMask mask(0.5, 99);
  BfdnAlgorithm algo;
  RunOptions opts;
  opts.mask = &mask;
  RunTrace trace = run(tree, algo, k, opts);
  for (const auto& rec : trace.rounds) {
    for (const auto& mv : rec.moves) {
      CHECK(((rec.movable >> mv.robot) & 1) == 1);
    }
  }
}

TEST_CASE("anchor-pinning adversary cannot prevent completion") {
  World tree = gen_random_tree(160, 77);
  BlockHeaviestAnchorMask mask;
  BreakdownReport report = run_with_breakdowns(tree, 4, mask);
  CHECK(report.trace.summary.complete);
  CHECK(report.complete_in_time);
}
