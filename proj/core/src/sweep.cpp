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

#include "cotex/sweep.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cotex/baselines.hpp"
#include "cotex/bfdn.hpp"
#include "cotex/bounds.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"
#include "cotex/planner.hpp"
#include "cotex/recursive.hpp"
#include "cotex/trace_io.hpp"

namespace cotex {

namespace {

std::map<std::string, long long> parse_params(const std::string& spec, std::string* name) {
  const auto colon = spec.find(':');
  *name = spec.substr(0, colon);
  std::map<std::string, long long> params;
  if (colon == std::string::npos) return params;
  std::istringstream rest(spec.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      params["value"] = std::stoll(item);
    } else {
      params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
  }
  return params;
}

long long need(const std::map<std::string, long long>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("generator spec missing `" + key + "`");
  return it->second;
}

}  // namespace

World make_generator(const std::string& spec, std::uint64_t seed) {
  std::string name;
  auto params = parse_params(spec, &name);
  if (name == "random") return gen_random_tree(static_cast<int>(need(params, "n")), seed);
  if (name == "spider")
    return gen_spider(static_cast<int>(need(params, "legs")),
                      static_cast<int>(need(params, "depth")));
  if (name == "complete")
    return gen_complete_tree(static_cast<int>(need(params, "b")),
                             static_cast<int>(need(params, "depth")));
  if (name == "grid") {
    auto grid = gen_random_grid(static_cast<int>(need(params, "w")),
                                static_cast<int>(need(params, "h")),
                                static_cast<int>(params.count("obstacles")
                                                     ? params.at("obstacles")
                                                     : 0),
                                seed);
    return grid.world;
  }
  throw std::invalid_argument("unknown generator `" + name + "`");
}

std::unique_ptr<ExplorationAlgorithm> make_algorithm(const std::string& name, int k) {
  std::string base;
  auto params = parse_params(name, &base);
  if (base == "bfdn") return std::make_unique<BfdnAlgorithm>();
  if (base == "dfs") return std::make_unique<DfsAlgorithm>();
  if (base == "bfdn1")
    return std::make_unique<BfdnAlgorithm>(static_cast<int>(need(params, "value")), true);
  if (base == "bfdn_ell")
    return std::make_unique<BfdnEll>(static_cast<int>(need(params, "value")), k);
  if (base == "planner") return std::make_unique<PlannerBfdn>();
  throw std::invalid_argument("unknown algorithm `" + name + "`");
}

double algorithm_bound(const std::string& name, const World& world, int k) {
  std::string base;
  auto params = parse_params(name, &base);
  const long long size = world.is_tree() ? world.node_count() : world.edge_count();
  if (base == "dfs") return 2.0 * (world.node_count() - 1);
  if (base == "bfdn_ell")
    return bfdn_ell_bound(size, world.depth(), world.max_degree(), k,
                          static_cast<int>(need(params, "value")));
  return bfdn_bound(size, world.depth(), world.max_degree(), k);
}

RunTrace run_cell(const SweepCell& cell) {
  World world = make_generator(cell.generator, cell.seed);
  auto algo = make_algorithm(cell.algorithm, cell.k);
  RunOptions opts;
  opts.seed = cell.seed;
  return run(world, *algo, cell.k, opts);
}

SweepResult sweep(const std::vector<std::string>& generators,
                  const std::vector<std::uint64_t>& seeds,
                  const std::vector<std::string>& algorithms, const std::vector<int>& ks) {
  SweepResult result;
  std::ostringstream csv;
  csv << "generator," << summary_csv_header() << "\n";
  for (const auto& gen : generators) {
    for (const auto seed : seeds) {
      World world = make_generator(gen, seed);
      for (const auto& algo_name : algorithms) {
        for (int k : ks) {
          auto algo = make_algorithm(algo_name, k);
          RunOptions opts;
          opts.seed = seed;
          SweepRow row;
          row.cell = SweepCell{gen, seed, algo_name, k};
          RunTrace trace = run(world, *algo, k, opts);
          row.summary = trace.summary;
          row.bound = algorithm_bound(algo_name, world, k);
          row.bound_ok = static_cast<double>(row.summary.runtime) <= std::ceil(row.bound);
          if (algo_name == "dfs") row.bound_ok = row.summary.runtime == 2 * (world.node_count() - 1);
          result.all_ok &= row.bound_ok;
          csv << gen << "," << summary_csv_row(row.summary, row.bound, row.bound_ok) << "\n";
          result.rows.push_back(std::move(row));
        }
      }
    }
  }
  result.csv = csv.str();
  return result;
}

}  // namespace cotex
