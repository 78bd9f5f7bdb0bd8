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

#include <cmath>
#include <set>
#include <sstream>

#include "cotex/baselines.hpp"
#include "cotex/bounds.hpp"
#include "cotex/generators.hpp"
#include "cotex/sweep.hpp"
#include "cotex/trace_io.hpp"

using namespace cotex;

TEST_CASE("random tree generator") {
  World one = gen_random_tree(1, 9);
  CHECK(one.node_count() == 1);
  CHECK(one.depth() == 0);

  World two = gen_random_tree(2, 9);
  CHECK(two.node_count() == 2);
  CHECK(two.parent[1] == 0);

  // Seeded reproducibility, frozen fixture for n = 1000, seed = 7.
  World a = gen_random_tree(1000, 7);
  World b = gen_random_tree(1000, 7);
  CHECK(a.parent == b.parent);
  CHECK(a.node_count() == 1000);
  CHECK(a.depth() == 12);
  CHECK(a.max_degree() == 10);
}

TEST_CASE("spider generator") {
  World path = gen_spider(1, 3);
  CHECK(path.node_count() == 4);
  CHECK(path.depth() == 3);

  World star = gen_spider(3, 1);
  CHECK(star.node_count() == 4);
  CHECK(star.max_degree() == 3);

  World spider = gen_spider(4, 5);
  CHECK(spider.node_count() == 21);
  CHECK(spider.depth() == 5);
  CHECK(spider.max_degree() == 4);
}

TEST_CASE("complete tree generator") {
  CHECK(gen_complete_tree(2, 3).node_count() == 15);
  CHECK(gen_complete_tree(1, 5).depth() == 5);
  CHECK(gen_complete_tree(3, 2).node_count() == 13);
  CHECK_THROWS_AS(gen_complete_tree(10, 8), std::invalid_argument);
}

TEST_CASE("single dfs runtimes") {
  CHECK(single_dfs(build_tree({{0, 1}})).summary.runtime == 2);
  CHECK(single_dfs(gen_spider(1, 4)).summary.runtime == 8);
  CHECK(single_dfs(gen_random_tree(500, 3)).summary.runtime == 998);
}

TEST_CASE("offline schedule splits the doubled tour") {
  World path = gen_spider(1, 4);  // 5 nodes
  auto solo = offline_schedule(path, 1);
  CHECK(solo.makespan == 8);  // the whole tour

  World star = build_tree({{0, 1}, {0, 2}, {0, 3}});
  auto trio = offline_schedule(star, 3);
  CHECK(trio.makespan == 2);  // one leaf each

  auto duo = offline_schedule(path, 2);
  CHECK(duo.makespan <= 12);  // 2(ceil(4/2) + 4)
  CHECK(duo.lower_bound_floor == std::max<long long>(4, 4));
}

TEST_CASE("offline walks are valid and cover every edge") {
  World tree = gen_random_tree(200, 31);
  const int k = 5;
  auto sched = offline_schedule(tree, k);
  CHECK(sched.makespan <= static_cast<long long>(offline_bound(tree.node_count(), tree.depth(), k)));
  std::set<std::pair<NodeId, NodeId>> covered;
  for (const auto& walk : sched.walks) {
    REQUIRE(!walk.empty());
    CHECK(walk.front() == 0);
    CHECK(walk.back() == 0);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      auto [lo, hi] = std::minmax(walk[i], walk[i + 1]);
      CHECK(tree.parent[hi] == lo);  // consecutive nodes share an edge
      covered.insert({lo, hi});
    }
  }
  CHECK(static_cast<int>(covered.size()) == tree.node_count() - 1);
}

TEST_CASE("bound table arithmetic") {
  // 2n/k + D^2 (ln 3 + 2) at n=1e6, D=100, k=16.
  const double b = bfdn_bound(1'000'000, 100, 3, 16);
  CHECK(b == doctest::Approx(125000.0 + 10000.0 * (std::log(3.0) + 2.0)));
  CHECK(b == doctest::Approx(155986.12).epsilon(1e-4));

  // k = 1: min(ln Delta, ln 1) = 0.
  CHECK(bfdn_bound(1000, 10, 5, 1) == doctest::Approx(2000.0 + 100.0 * 2.0));

  // Offline on a star with one robot per leaf.
  const long long n = 100;
  CHECK(2.0 * (static_cast<double>(n) / (n - 1) + 1) ==
        doctest::Approx(offline_bound(n, 1, n - 1)).epsilon(0.02));

  auto rows = bound_table(1'000'000, 100, 16, 3, 2);
  REQUIRE(rows.size() == 5);
  int best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].best) ++best, CHECK(rows[i].algorithm == "bfdn");
  }
  CHECK(best == 1);
  CHECK(format_bound_table(rows).find("algorithm,bound,best") == 0);
}

TEST_CASE("sweep produces one checked row per cell") {
  SweepResult one = sweep({"random:n=50"}, {1}, {"bfdn"}, {2});
  REQUIRE(one.rows.size() == 1);
  CHECK(one.all_ok);
  CHECK(one.rows[0].bound_ok);

  SweepResult spiders = sweep({"spider:legs=2,depth=6", "spider:legs=4,depth=6",
                               "spider:legs=8,depth=6"},
                              {1}, {"bfdn"}, {2, 4, 8});
  CHECK(spiders.rows.size() == 9);
  CHECK(spiders.all_ok);

  SweepResult empty = sweep({}, {}, {}, {});
  CHECK(empty.rows.empty());
  CHECK(empty.csv == "generator," + summary_csv_header() + "\n");
}

TEST_CASE("sweep cells replay bit-identically") {
  SweepCell cell{"random:n=120", 77, "bfdn", 4};
  RunTrace first = run_cell(cell);
  RunTrace second = run_cell(cell);
  std::ostringstream a, b;
  write_trace_jsonl(first, a);
  write_trace_jsonl(second, b);
  CHECK(a.str() == b.str());
  CHECK(first.summary.runtime == second.summary.runtime);
}

TEST_CASE("generator spec parsing") {
  CHECK(make_generator("random:n=40", 5).node_count() == 40);
  CHECK(make_generator("spider:legs=3,depth=2", 0).node_count() == 7);
  CHECK(make_generator("complete:b=2,depth=2", 0).node_count() == 7);
  CHECK_FALSE(make_generator("grid:w=4,h=4,obstacles=0", 1).is_tree());
  CHECK_THROWS_AS(make_generator("nope:z=1", 0), std::invalid_argument);
  CHECK_THROWS_AS(make_algorithm("nope", 1), std::invalid_argument);
}
