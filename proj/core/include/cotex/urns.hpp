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

#ifndef COTEX_URNS_HPP_
#define COTEX_URNS_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace cotex {

/// Zero-sum ball-moving game on k urns. Each step the adversary picks a
/// non-empty urn a, the player picks an urn b, and one ball moves a -> b.
/// Urns picked by the adversary leave the untouched set U; the game stops
/// when every urn still in U holds at least delta balls.
struct GameState {
  std::vector<int> loads;   // 0-based urns
  std::set<int> untouched;  // U
  int delta = 1;
  long long step = 0;

  int k() const { return static_cast<int>(loads.size()); }
  int total() const;
  int untouched_total() const;  // N: balls inside U
  bool over() const;            // all urns of U hold >= delta
};

/// All urns loaded with one ball, everything untouched.
GameState standard_init(int k, int delta);

/// One urn with k-u balls plus u singleton urns; only the singletons are
/// untouched. Requires 1 <= u <= k-1.
GameState generalized_init(int k, int u, int delta);

/// Player move: least-loaded urn among the untouched ones (after the
/// adversary pick a leaves U), smallest index on ties; a itself when U runs
/// empty (the game is over then and the ball placement is moot).
int player_balancing(const GameState& state, int a);

/// Adversary: re-pick a previously picked non-empty urn (smallest index)
/// whenever some ball sits outside U, otherwise open the most loaded
/// untouched urn (smallest index on ties).
int adversary_greedy(const GameState& state);

/// Uniform choice among non-empty urns, seeded.
class RandomAdversary {
 public:
  explicit RandomAdversary(std::uint64_t seed) : state_(seed ? seed : 1) {}
  int pick(const GameState& state);

 private:
  std::uint64_t state_;
};

/// Adversary replaying the exhaustive best response against the balancing
/// player (small instances only).
int adversary_optimal(const GameState& state);

struct GameStep {
  int adversary = 0;
  int player = 0;
  std::vector<int> loads_after;
  int untouched_after = 0;
};

struct GamePlay {
  long long length = 0;
  std::vector<GameStep> steps;
};

using AdversaryFn = std::function<int(const GameState&)>;

/// Runs adversary picks against the balancing player until the stop
/// condition; throws std::logic_error on an illegal pick.
GamePlay play(const AdversaryFn& adversary, GameState state);

/// Longest remaining game against the balancing player from a configuration
/// with N balls spread over u untouched urns:
///   R(N,u) = 0                                     if delta*u - N <= 0
///   R(N,u) = 1 + max(R(N-ceil(N/u)+1, u-1),
///                    R(N-floor(N/u)+1, u-1),
///                    [N < k] R(N+1, u))            otherwise.
long long game_value(int balls_in_untouched, int untouched, int k, int delta);

/// Exhaustive maximum over adversary strategies with the player fixed to the
/// balancing rule, memoized on load multisets. Guarded to k <= 6, delta <= 6.
long long game_value_bruteforce(const GameState& state);

}  // namespace cotex

#endif  // COTEX_URNS_HPP_
