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

#include "cotex/bounds.hpp"
#include "cotex/urns.hpp"

using namespace cotex;

namespace {

GameState state_of(std::vector<int> loads, std::vector<int> untouched, int delta) {
  GameState s;
  s.loads = std::move(loads);
  for (int i : untouched) s.untouched.insert(i);
  s.delta = delta;
  return s;
}

}  // namespace

TEST_CASE("balancing player picks the least loaded untouched urn") {
  // After the adversary pick leaves U, only urn 1 remains untouched.
  CHECK(player_balancing(state_of({1, 1}, {0, 1}, 2), 0) == 1);
  // Tied minima go to the smallest index.
  CHECK(player_balancing(state_of({3, 0, 0}, {1, 2}, 3), 0) == 1);
  // Singleton candidate set.
  CHECK(player_balancing(state_of({0, 2, 1}, {2}, 3), 1) == 2);
}

TEST_CASE("greedy adversary prefers re-picking over opening") {
  // No ball outside U: open the fullest untouched urn, smallest index first.
  CHECK(adversary_greedy(state_of({1, 1}, {0, 1}, 2)) == 0);
  // A ball outside U: re-pick it.
  CHECK(adversary_greedy(state_of({2, 1, 1}, {1, 2}, 2)) == 0);
  CHECK(adversary_greedy(state_of({1, 2, 1}, {1, 2}, 2)) == 0);
}

TEST_CASE("play lengths on small boards") {
  CHECK(play(adversary_greedy, standard_init(2, 2)).length == 1);
  CHECK(play(adversary_greedy, standard_init(1, 1)).length == 0);
  CHECK(play([](const GameState& s) { return adversary_optimal(s); }, standard_init(4, 4))
            .length == 5);
}

TEST_CASE("game value recursion") {
  // Stopped configurations.
  CHECK(game_value(4, 1, 4, 2) == 0);
  CHECK(game_value(2, 1, 2, 2) == 0);
  // Two urns, delta = 2.
  CHECK(game_value(2, 2, 2, 2) == 1);
  // The k = delta = 4 chain.
  CHECK(game_value(3, 1, 4, 4) == 1);
  CHECK(game_value(4, 2, 4, 4) == 2);
  CHECK(game_value(3, 2, 4, 4) == 3);
  CHECK(game_value(4, 3, 4, 4) == 4);
  CHECK(game_value(4, 4, 4, 4) == 5);
}

TEST_CASE("generalized initial boards") {
  GameState g = generalized_init(4, 2, 4);
  CHECK(g.loads == std::vector<int>{2, 1, 1, 0});
  CHECK(g.untouched == std::set<int>{1, 2});

  GameState h = generalized_init(2, 1, 2);
  CHECK(h.loads == std::vector<int>{1, 1});
  CHECK(h.untouched == std::set<int>{1});

  GameState f = generalized_init(5, 4, 3);
  CHECK(f.loads == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(f.untouched == std::set<int>{1, 2, 3, 4});

  CHECK_THROWS_AS(generalized_init(3, 3, 2), std::invalid_argument);
}

TEST_CASE("brute force agrees with the closed recursion") {
  for (int k = 1; k <= 5; ++k) {
    for (int delta = 1; delta <= 5; ++delta) {
      GameState init = standard_init(k, delta);
      CHECK(game_value_bruteforce(init) == game_value(k, k, k, delta));
      for (int u = 1; u <= k - 1; ++u) {
        GameState gen = generalized_init(k, u, delta);
        CHECK(game_value_bruteforce(gen) ==
              game_value(gen.untouched_total(), u, k, delta));
      }
    }
  }
}

TEST_CASE("balancing keeps untouched loads within one of each other") {
  for (int k : {3, 5, 8, 13}) {
    for (int delta : {2, 3, 7}) {
      RandomAdversary rng(1234u * k + delta);
      GameState s = standard_init(k, delta);
      while (!s.over()) {
        const int a = rng.pick(s);
        const int b = player_balancing(s, a);
        --s.loads[a];
        ++s.loads[b];
        s.untouched.erase(a);
        int lo = 1 << 30, hi = -1;
        for (int i : s.untouched) {
          lo = std::min(lo, s.loads[i]);
          hi = std::max(hi, s.loads[i]);
        }
        if (!s.untouched.empty()) CHECK(hi - lo <= 1);
      }
    }
  }
}

TEST_CASE("value table: monotone in the ball count, re-pick branch maximal") {
  const int kk = 16, dd = 16;
  for (int u = 0; u <= kk; ++u) {
    for (int n = 0; n < kk; ++n) {
      CHECK(game_value(n, u, kk, dd) >= game_value(n + 1, u, kk, dd));
      if (static_cast<long long>(dd) * u - n > 0) {
        CHECK(game_value(n, u, kk, dd) == 1 + game_value(n + 1, u, kk, dd));
      }
    }
  }
}

TEST_CASE("game length bound holds for all shipped adversaries") {
  for (int k : {2, 3, 8, 16}) {
    for (int delta : {2, 3, 16}) {
      const double cap = game_length_bound(k, delta);
      CHECK(play(adversary_greedy, standard_init(k, delta)).length <= cap);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RandomAdversary rng(seed + 1);
        auto adversary = [&rng](const GameState& s) { return rng.pick(s); };
        CHECK(play(adversary, standard_init(k, delta)).length <= cap);
      }
    }
  }
}

TEST_CASE("play rejects an illegal adversary") {
  auto bad = [](const GameState&) { return 0; };
  GameState s = state_of({0, 2}, {1}, 3);
  CHECK_THROWS_AS(play(bad, s), std::logic_error);
}
