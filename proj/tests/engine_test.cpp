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

#include "cotex/audit.hpp"
#include "cotex/baselines.hpp"
#include "cotex/bfdn.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"
#include "cotex/trace_io.hpp"

using namespace cotex;

TEST_CASE("single robot dfs takes exactly 2(n-1) rounds") {
  for (auto [n, seed] : {std::pair{2, 1}, {17, 5}, {500, 7}}) {
    World tree = gen_random_tree(n, seed);
    RunTrace trace = single_dfs(tree);
    CHECK(trace.summary.runtime == 2 * (n - 1));
    CHECK(trace.summary.complete);
    CHECK(audit_trace(trace, tree).ok());
  }
}

TEST_CASE("star with k leaves and k robots finishes in two rounds") {
  World star = build_tree({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  BfdnAlgorithm bfdn;
  RunTrace trace = run(star, bfdn, 4);
  CHECK(trace.summary.runtime == 2);  // all down, all up
  CHECK(trace.summary.complete);
  CHECK(audit_trace(trace, star).ok());
}

TEST_CASE("4-node path with one robot takes six rounds") {
  World path = build_tree({{0, 1}, {1, 2}, {2, 3}});
  BfdnAlgorithm bfdn;
  RunTrace trace = run(path, bfdn, 1);
  CHECK(trace.summary.runtime == 6);
  CHECK(audit_trace(trace, path).ok());
}

TEST_CASE("mean mobility") {
  AllOnesMask ones;
  CHECK(mean_mobility(ones, 10, 4) == doctest::Approx(10.0));

  // Everybody blocked every other round.
  std::vector<std::uint64_t> rows;
  for (int t = 0; t < 10; ++t) rows.push_back(t % 2 == 0 ? ~0ull : 0ull);
  MatrixMask alternating(rows, "alt");
  CHECK(mean_mobility(alternating, 10, 3) == doctest::Approx(5.0));

  // Robot 0 permanently blocked, k = 2.
  MatrixMask half({~1ull}, "half");
  CHECK(mean_mobility(half, 10, 2) == doctest::Approx(5.0));
}

TEST_CASE("audit: idle rounds, unique first traversals, excursions") {
  World star = build_tree({{0, 1}, {0, 2}, {0, 3}});
  BfdnAlgorithm bfdn;
  RunTrace trace = run(star, bfdn, 3);
  AuditReport report = audit_trace(trace, star);
  CHECK(report.ok());
  CHECK(report.idle_rounds == 0);  // both effective rounds have every robot moving

  // Excursion identity on a deeper run.
  World tree = gen_random_tree(300, 23);
  RunTrace deep = run(tree, bfdn, 5);
  CHECK(deep.summary.excursions_tracked);
  CHECK(!deep.summary.excursions.empty());
  for (const auto& ex : deep.summary.excursions) {
    CHECK(ex.moves >= 2 * ex.anchor_depth);
    CHECK((ex.moves - 2 * ex.anchor_depth) % 2 == 0);
    CHECK(ex.dangling_explored == (ex.moves - 2 * ex.anchor_depth) / 2);
  }
  CHECK(audit_trace(deep, tree).ok());
}

TEST_CASE("engine rejects an illegal selection") {
  World path = build_tree({{0, 1}, {1, 2}});

  struct Cheater : ExplorationAlgorithm {
    std::string name() const override { return "cheater"; }
    void begin(const ExplorationView&, int) override {}
    void select(RoundContext& ctx) override {
      // Edge 1 hangs below node 1, not below the root.
      ctx.select_edge(0, 1);
    }
  } cheater;
  CHECK_THROWS_AS(run(path, cheater, 1), std::logic_error);

  struct DoubleSelect : ExplorationAlgorithm {
    std::string name() const override { return "double"; }
    void begin(const ExplorationView&, int) override {}
    void select(RoundContext& ctx) override {
      ctx.select_edge(0, 0);
      ctx.select_edge(1, 0);  // same dangling edge
    }
  } dbl;
  CHECK_THROWS_AS(run(path, dbl, 2), std::logic_error);
}

TEST_CASE("round limit breach is flagged") {
  World path = build_tree({{0, 1}});

  struct Bouncer : ExplorationAlgorithm {
    std::string name() const override { return "bouncer"; }
    void begin(const ExplorationView&, int) override {}
    void select(RoundContext& ctx) override {
      const NodeId u = ctx.positions()[0];
      if (u == 0) {
        ctx.select_edge(0, 0);
      } else {
        ctx.select_up(0);
      }
    }
  } bouncer;

  RunOptions opts;
  opts.round_limit = 50;
  CHECK_THROWS_AS(run(path, bouncer, 1, opts), RoundLimitError);
  opts.throw_on_round_limit = false;
  RunTrace trace = run(path, bouncer, 1, opts);
  CHECK(trace.summary.hit_round_limit);
}

TEST_CASE("determinism: identical inputs give identical traces") {
  World tree = gen_random_tree(200, 99);
  BfdnAlgorithm a, b;
  RunTrace t1 = run(tree, a, 7);
  RunTrace t2 = run(tree, b, 7);
  std::ostringstream s1, s2;
  write_trace_jsonl(t1, s1);
  write_trace_jsonl(t2, s2);
  CHECK(s1.str() == s2.str());
  CHECK(t1.summary.runtime == t2.summary.runtime);
  CHECK(t1.summary.edge_events == t2.summary.edge_events);
}

TEST_CASE("discovery is monotone and statuses only move forward") {
  World tree = gen_random_tree(120, 4);
  BfdnAlgorithm bfdn;
  int last_nodes = 0, last_edges = 0;
  std::vector<EdgeStatus> last_status(tree.edge_count(), EdgeStatus::undiscovered);
  RunOptions opts;
  opts.round_hook = [&](const RoundInfo& info) {
    CHECK(info.view.discovered_node_count() >= last_nodes);
    CHECK(info.view.discovered_edge_count() >= last_edges);
    last_nodes = info.view.discovered_node_count();
    last_edges = info.view.discovered_edge_count();
    for (EdgeId e = 0; e < tree.edge_count(); ++e) {
      CHECK(static_cast<int>(info.view.status(e)) >= static_cast<int>(last_status[e]));
      last_status[e] = info.view.status(e);
    }
  };
  run(tree, bfdn, 4, opts);
}

TEST_CASE("synchrony: every position change matches one selected move") {
  World tree = gen_random_tree(80, 8);
  BfdnAlgorithm bfdn;
  std::vector<NodeId> prev(6, tree.root);
  RunOptions opts;
  opts.round_hook = [&](const RoundInfo& info) {
    for (int i = 0; i < 6; ++i) {
      bool moved_in_record = false;
      for (const auto& mv : info.record.moves) {
        if (mv.robot == i) {
          moved_in_record = true;
          CHECK(mv.from == prev[i]);
          CHECK(mv.to == info.positions[i]);
        }
      }
      if (!moved_in_record) CHECK(prev[i] == info.positions[i]);
      prev[i] = info.positions[i];
    }
  };
  RunTrace trace = run(tree, bfdn, 6, opts);
  CHECK(audit_trace(trace, tree).ok());
}

TEST_CASE("trace jsonl round trip and rebuild") {
  World tree = gen_random_tree(60, 21);
  BfdnAlgorithm bfdn;
  RunTrace trace = run(tree, bfdn, 3);

  std::stringstream buf;
  write_trace_jsonl(trace, buf);
  auto rounds = read_trace_jsonl(buf);
  REQUIRE(rounds.size() == trace.rounds.size());

  RunTrace rebuilt = rebuild_trace(tree, 3, std::move(rounds), "bfdn");
  CHECK(rebuilt.summary.runtime == trace.summary.runtime);
  CHECK(rebuilt.summary.edge_events == trace.summary.edge_events);
  CHECK(rebuilt.summary.complete == trace.summary.complete);
  CHECK(rebuilt.summary.excursions.size() == trace.summary.excursions.size());
  CHECK(audit_trace(rebuilt, tree).ok());
}
