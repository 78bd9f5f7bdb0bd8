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

#include "cotex/urns.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace cotex {

int GameState::total() const {
  int t = 0;
  for (int x : loads) t += x;
  return t;
}

int GameState::untouched_total() const {
  int t = 0;
  for (int i : untouched) t += loads[i];
  return t;
}

bool GameState::over() const {
  for (int i : untouched) {
    if (loads[i] < delta) return false;
  }
  return true;
}

GameState standard_init(int k, int delta) {
  if (k < 1 || delta < 1) throw std::invalid_argument("standard_init: k, delta >= 1");
  GameState s;
  s.loads.assign(k, 1);
  for (int i = 0; i < k; ++i) s.untouched.insert(i);
  s.delta = delta;
  return s;
}

GameState generalized_init(int k, int u, int delta) {
  if (u < 1 || u > k - 1)
    throw std::invalid_argument("generalized_init: u must be in 1..k-1");
  GameState s;
  s.loads.assign(k, 0);
  s.loads[0] = k - u;
  for (int i = 1; i <= u; ++i) {
    s.loads[i] = 1;
    s.untouched.insert(i);
  }
  s.delta = delta;
  return s;
}

int player_balancing(const GameState& state, int a) {
  if (a < 0 || a >= state.k()) throw std::invalid_argument("player_balancing: urn out of range");
  if (state.loads[a] < 1) throw std::invalid_argument("player_balancing: source urn is empty");
  int best = -1;
  for (int i : state.untouched) {
    if (i == a) continue;
    if (best < 0 || state.loads[i] < state.loads[best]) best = i;
  }
  return best >= 0 ? best : a;
}

int adversary_greedy(const GameState& state) {
  const int n = state.untouched_total();
  if (n <= state.total() - 1) {
    for (int i = 0; i < state.k(); ++i) {
      if (state.loads[i] >= 1 && state.untouched.count(i) == 0) return i;
    }
  }
  int best = -1;
  for (int i : state.untouched) {
    if (state.loads[i] >= 1 && (best < 0 || state.loads[i] > state.loads[best])) best = i;
  }
  if (best < 0) throw std::logic_error("adversary_greedy: no legal pick");
  return best;
}

int RandomAdversary::pick(const GameState& state) {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  std::vector<int> nonempty;
  for (int i = 0; i < state.k(); ++i) {
    if (state.loads[i] >= 1) nonempty.push_back(i);
  }
  return nonempty[z % nonempty.size()];
}

namespace {

void apply_step(GameState& s, int a, int b) {
  --s.loads[a];
  ++s.loads[b];
  s.untouched.erase(a);
  ++s.step;
}

// Memo key: delta plus the load multisets inside and outside U. The value is
// invariant under urn permutations because the balancing player breaks ties
// by index only among equivalent successors.
using BruteKey = std::tuple<int, std::vector<int>, std::vector<int>>;

BruteKey brute_key(const GameState& s) {
  std::vector<int> in, out;
  for (int i = 0; i < s.k(); ++i) {
    if (s.untouched.count(i)) {
      in.push_back(s.loads[i]);
    } else {
      out.push_back(s.loads[i]);
    }
  }
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  return {s.delta, std::move(in), std::move(out)};
}

long long brute_value(const GameState& s, std::map<BruteKey, long long>& memo) {
  if (s.over()) return 0;
  const BruteKey key = brute_key(s);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long best = 0;
  for (int a = 0; a < s.k(); ++a) {
    if (s.loads[a] < 1) continue;
    GameState next = s;
    const int b = player_balancing(next, a);
    apply_step(next, a, b);
    best = std::max(best, 1 + brute_value(next, memo));
  }
  memo[key] = best;
  return best;
}

std::map<BruteKey, long long>& brute_memo() {
  static std::map<BruteKey, long long> memo;
  return memo;
}

}  // namespace

GamePlay play(const AdversaryFn& adversary, GameState state) {
  GamePlay result;
  while (!state.over()) {
    const int a = adversary(state);
    if (a < 0 || a >= state.k() || state.loads[a] < 1)
      throw std::logic_error("play: adversary picked an illegal urn");
    const int b = player_balancing(state, a);
    if (b < 0 || b >= state.k()) throw std::logic_error("play: player returned an illegal urn");
    apply_step(state, a, b);
    GameStep step;
    step.adversary = a;
    step.player = b;
    step.loads_after = state.loads;
    step.untouched_after = static_cast<int>(state.untouched.size());
    result.steps.push_back(std::move(step));
    ++result.length;
  }
  return result;
}

long long game_value(int balls_in_untouched, int untouched, int k, int delta) {
  if (untouched < 0 || untouched > k || balls_in_untouched < 0 || balls_in_untouched > k)
    throw std::invalid_argument("game_value: arguments out of range");
  static std::map<std::tuple<int, int, int, int>, long long> memo;
  struct Solver {
    int k, delta;
    std::map<std::tuple<int, int, int, int>, long long>& memo;
    long long value(int n, int u) {
      if (static_cast<long long>(delta) * u - n <= 0) return 0;
      const auto key = std::make_tuple(n, u, k, delta);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const int up = n - (n + u - 1) / u + 1;  // most loaded untouched urn opened
      const int dn = n - n / u + 1;            // least loaded untouched urn opened
      long long best = std::max(value(up, u - 1), value(dn, u - 1));
      if (n < k) best = std::max(best, value(n + 1, u));
      const long long result = 1 + best;
      memo[key] = result;
      return result;
    }
  } solver{k, delta, memo};
  return solver.value(balls_in_untouched, untouched);
}

long long game_value_bruteforce(const GameState& state) {
  if (state.k() > 6 || state.delta > 6)
    throw std::invalid_argument("game_value_bruteforce: instance too large (k, delta <= 6)");
  return brute_value(state, brute_memo());
}

int adversary_optimal(const GameState& state) {
  if (state.k() > 6 || state.delta > 6)
    throw std::invalid_argument("adversary_optimal: instance too large (k, delta <= 6)");
  int best_pick = -1;
  long long best_value = -1;
  for (int a = 0; a < state.k(); ++a) {
    if (state.loads[a] < 1) continue;
    GameState next = state;
    const int b = player_balancing(next, a);
    apply_step(next, a, b);
    const long long v = 1 + brute_value(next, brute_memo());
    if (v > best_value) {
      best_value = v;
      best_pick = a;
    }
  }
  if (best_pick < 0) throw std::logic_error("adversary_optimal: no legal pick");
  return best_pick;
}

}  // namespace cotex
