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

#ifndef COTEX_SWEEP_HPP_
#define COTEX_SWEEP_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/trace.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// Generator specs: `random:n=1000` (seeded), `spider:legs=4,depth=16`,
/// `complete:b=2,depth=8`, `grid:w=20,h=20,obstacles=3` (seeded).
World make_generator(const std::string& spec, std::uint64_t seed);

/// Algorithm names: `bfdn`, `dfs`, `bfdn1:<cap>`, `bfdn_ell:<ell>`, `planner`.
std::unique_ptr<ExplorationAlgorithm> make_algorithm(const std::string& name, int k);

/// The closed-form guarantee the named algorithm is held to on this input.
double algorithm_bound(const std::string& name, const World& world, int k);

struct SweepCell {
  std::string generator;
  std::uint64_t seed = 0;
  std::string algorithm;
  int k = 1;
};

struct SweepRow {
  SweepCell cell;
  RunSummary summary;
  double bound = 0.0;
  bool bound_ok = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_ok = true;
  std::string csv;  // generator column + the summary row format
};

/// Runs one cell deterministically; the same cell always reproduces the same
/// trace bit for bit.
RunTrace run_cell(const SweepCell& cell);

/// Full matrix of generators x seeds x algorithms x k, rows ordered by spec
/// coordinates.
SweepResult sweep(const std::vector<std::string>& generators,
                  const std::vector<std::uint64_t>& seeds,
                  const std::vector<std::string>& algorithms, const std::vector<int>& ks);

}  // namespace cotex

#endif  // COTEX_SWEEP_HPP_
