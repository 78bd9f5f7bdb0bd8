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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cotex/audit.hpp"
#include "cotex/baselines.hpp"
#include "cotex/bounds.hpp"
#include "cotex/breakdown.hpp"
#include "cotex/engine.hpp"
#include "cotex/generators.hpp"
#include "cotex/graph_explore.hpp"
#include "cotex/planner.hpp"
#include "cotex/sweep.hpp"
#include "cotex/trace_io.hpp"
#include "cotex/urns.hpp"
#include "cotex/world.hpp"

namespace {

using namespace cotex;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("COTEX_SEED")) return std::stoull(env);
  return cli_seed;
}

Rect parse_rect(const std::string& s) {
  Rect r;
  if (std::sscanf(s.c_str(), "%d,%d,%d,%d", &r.x1, &r.y1, &r.x2, &r.y2) != 4)
    throw CLI::ValidationError("--obstacle expects x1,y1,x2,y2");
  return r;
}

std::unique_ptr<MobilityMask> parse_mask(const std::string& spec, int k,
                                         std::uint64_t seed) {
  if (spec.empty() || spec == "ones") return std::make_unique<AllOnesMask>();
  if (spec == "roundrobin") return std::make_unique<RoundRobinMask>(k);
  if (spec.rfind("bernoulli:", 0) == 0)
    return std::make_unique<BernoulliMask>(std::stod(spec.substr(10)), seed);
  if (spec.rfind("file:", 0) == 0)
    return std::make_unique<MatrixMask>(load_mask_file(spec.substr(5), k));
  if (spec == "blockheaviest") return std::make_unique<BlockHeaviestAnchorMask>();
  throw CLI::ValidationError("unknown mask `" + spec + "`");
}

World load_input(const std::string& tree_path, const std::string& gen_spec,
                 const std::string& grid_spec, const std::vector<std::string>& obstacles,
                 std::uint64_t seed) {
  if (!tree_path.empty()) return load_world(tree_path);
  if (!grid_spec.empty()) {
    int w = 0, h = 0;
    if (std::sscanf(grid_spec.c_str(), "%dx%d", &w, &h) != 2)
      throw CLI::ValidationError("--grid expects WxH");
    std::vector<Rect> rects;
    for (const auto& o : obstacles) rects.push_back(parse_rect(o));
    return gen_grid_with_obstacles(w, h, rects).world;
  }
  if (!gen_spec.empty()) return make_generator(gen_spec, seed);
  throw CLI::ValidationError("provide --input, --gen or --grid");
}

int cmd_gen(const std::string& gen_spec, const std::string& grid_spec,
            const std::vector<std::string>& obstacles, std::uint64_t seed,
            const std::string& out) {
  World w = load_input("", gen_spec, grid_spec, obstacles, effective_seed(seed));
  if (out.empty()) {
    write_world(w, std::cout);
  } else {
    save_world(w, out);
    std::cerr << (w.is_tree() ? "tree" : "graph") << " with " << w.node_count() << " nodes, "
              << w.edge_count() << " edges, depth " << w.depth() << " -> " << out << "\n";
  }
  return 0;
}

int cmd_run(const std::string& input, const std::string& gen_spec, const std::string& grid_spec,
            const std::vector<std::string>& obstacles, const std::string& algo_name, int k,
            int ell, const std::string& model, const std::string& mask_spec,
            std::uint64_t seed_in, const std::string& trace_path,
            const std::string& summary_path) {
  const std::uint64_t seed = effective_seed(seed_in);
  World world = load_input(input, gen_spec, grid_spec, obstacles, seed);

  std::string name = algo_name;
  if (name == "bfdn_ell") name += ":" + std::to_string(ell);
  if (model == "planner") name = "planner";

  RunTrace trace;
  if (model == "breakdown") {
    auto mask = parse_mask(mask_spec, k, seed);
    BreakdownReport report = run_with_breakdowns(world, k, *mask);
    trace = std::move(report.trace);
    std::cout << "mobility threshold " << report.mobility_threshold << ", reached at round "
              << report.threshold_round << ", explored in time: "
              << (report.complete_in_time ? "yes" : "no") << "\n";
    if (!report.complete_in_time) {
      std::cerr << report.detail << "\n";
      return 1;
    }
  } else if (model == "graph" || !world.is_tree()) {
    GraphRunReport report = run_graph_bfdn(world, k);
    trace = std::move(report.trace);
    for (const auto& p : report.problems) std::cerr << p << "\n";
    if (!report.ok()) return 1;
    std::cout << "closed " << report.closed_edges << " edges, bound " << report.runtime_bound
              << "\n";
  } else {
    auto algo = make_algorithm(name, k);
    RunOptions opts;
    opts.seed = seed;
    std::unique_ptr<MobilityMask> mask;
    if (!mask_spec.empty() && mask_spec != "ones") {
      mask = parse_mask(mask_spec, k, seed);
      opts.mask = mask.get();
    }
    trace = run(world, *algo, k, opts);
  }
  trace.summary.seed = seed;

  const double bound = algorithm_bound(name, world, k);
  const bool bound_ok = static_cast<double>(trace.summary.runtime) <= std::ceil(bound);
  std::cout << summary_csv_header() << "\n"
            << summary_csv_row(trace.summary, bound, bound_ok) << "\n";

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    write_trace_jsonl(trace, out);
  }
  if (!summary_path.empty()) {
    std::ofstream out(summary_path);
    out << summary_csv_header() << "\n" << summary_csv_row(trace.summary, bound, bound_ok) << "\n";
  }
  return bound_ok ? 0 : 1;
}

int cmd_game(int k, int delta, const std::string& adversary, const std::string& init,
             std::uint64_t seed_in) {
  const std::uint64_t seed = effective_seed(seed_in);
  GameState state;
  if (init == "standard") {
    state = standard_init(k, delta);
  } else if (init.rfind("generalized:", 0) == 0) {
    state = generalized_init(k, std::stoi(init.substr(12)), delta);
  } else {
    throw CLI::ValidationError("--init expects standard or generalized:<u>");
  }

  GamePlay result;
  if (adversary == "greedy") {
    result = play(adversary_greedy, state);
  } else if (adversary == "random") {
    RandomAdversary rng(seed);
    result = play([&rng](const GameState& s) { return rng.pick(s); }, state);
  } else if (adversary == "optimal") {
    result = play([](const GameState& s) { return adversary_optimal(s); }, state);
  } else {
    throw CLI::ValidationError("--adversary expects greedy, random or optimal");
  }

  const double bound = game_length_bound(k, delta);
  std::cout << "length," << result.length << "\nbound," << bound << "\n";
  std::cout << "step,adversary,player,untouched,loads\n";
  for (std::size_t t = 0; t < result.steps.size(); ++t) {
    const auto& s = result.steps[t];
    std::cout << t + 1 << "," << s.adversary << "," << s.player << "," << s.untouched_after
              << ",";
    for (std::size_t i = 0; i < s.loads_after.size(); ++i) {
      std::cout << (i ? " " : "") << s.loads_after[i];
    }
    std::cout << "\n";
  }
  return static_cast<double>(result.length) <= bound ? 0 : 1;
}

int cmd_sweep(const std::vector<std::string>& gens, const std::vector<std::uint64_t>& seeds_in,
              const std::vector<std::string>& algos, const std::vector<int>& ks,
              const std::string& out) {
  std::vector<std::uint64_t> seeds = seeds_in;
  if (const char* env = std::getenv("COTEX_SEED")) seeds.assign(1, std::stoull(env));
  if (seeds.empty()) seeds.push_back(1);
  SweepResult result = sweep(gens, seeds, algos, ks);
  if (out.empty()) {
    std::cout << result.csv;
  } else {
    std::ofstream f(out);
    f << result.csv;
  }
  for (const auto& row : result.rows) {
    if (!row.bound_ok) {
      std::cerr << "bound violated: " << row.cell.generator << " seed " << row.cell.seed << " "
                << row.cell.algorithm << " k=" << row.cell.k << "\n";
    }
  }
  return result.all_ok ? 0 : 1;
}

int cmd_bounds(long long n, int depth, int k, long long delta, int ell_max) {
  std::cout << format_bound_table(bound_table(n, depth, k, delta, ell_max));
  return 0;
}

int cmd_verify(const std::string& input, const std::string& trace_path, int k,
               const std::string& algo_name) {
  World world = load_world(input);
  std::ifstream in(trace_path);
  if (!in) {
    std::cerr << "cannot open " << trace_path << "\n";
    return 2;
  }
  auto rounds = read_trace_jsonl(in);
  RunTrace trace = rebuild_trace(world, k, std::move(rounds), algo_name);
  AuditReport report = audit_trace(trace, world);
  std::cout << report.to_string();
  std::cout << "runtime," << trace.summary.runtime << "\nedge_events," << trace.summary.edge_events
            << "\ncomplete," << (trace.summary.complete ? 1 : 0) << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collaborative online tree exploration workbench"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec, grid_spec, out_path;
  std::vector<std::string> obstacles;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "emit a tree or graph file");
  gen->add_option("--gen", gen_spec, "generator spec, e.g. random:n=1000");
  gen->add_option("--grid", grid_spec, "grid WxH");
  gen->add_option("--obstacle", obstacles, "rectangle x1,y1,x2,y2 (repeatable)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output file (stdout if omitted)");

  // run
  std::string input, algo_name = "bfdn", model, mask_spec, trace_path, summary_path;
  int k = 1, ell = 1;
  auto* run_cmd = app.add_subcommand("run", "run one simulation");
  run_cmd->add_option("--input", input, "tree/graph file");
  run_cmd->add_option("--gen", gen_spec, "generator spec");
  run_cmd->add_option("--grid", grid_spec, "grid WxH");
  run_cmd->add_option("--obstacle", obstacles, "rectangle x1,y1,x2,y2 (repeatable)");
  run_cmd->add_option("--algo", algo_name, "bfdn | dfs | bfdn1:<cap> | bfdn_ell | planner");
  run_cmd->add_option("--ell", ell, "recursion parameter for bfdn_ell");
  run_cmd->add_option("--k", k, "robot count")->required();
  run_cmd->add_option("--model", model, "planner | breakdown | graph");
  run_cmd->add_option("--mask", mask_spec, "ones | bernoulli:p | roundrobin | file:path");
  run_cmd->add_option("--seed", seed, "seed");
  run_cmd->add_option("--trace", trace_path, "write the JSONL trace here");
  run_cmd->add_option("--summary", summary_path, "write the summary CSV here");

  // game
  int delta = 2;
  std::string adversary = "greedy", init = "standard", player = "balancing";
  auto* game = app.add_subcommand("game", "play the urns game");
  game->add_option("--k", k, "urn count")->required();
  game->add_option("--delta", delta, "stop threshold")->required();
  game->add_option("--player", player, "balancing (the only shipped player)");
  game->add_option("--adversary", adversary, "greedy | random | optimal");
  game->add_option("--init", init, "standard | generalized:<u>");
  game->add_option("--seed", seed, "seed for the random adversary");

  // sweep
  std::vector<std::string> sweep_gens, sweep_algos;
  std::vector<std::uint64_t> sweep_seeds;
  std::vector<int> sweep_ks;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a generator x algorithm x k matrix");
  sweep_cmd->add_option("--gen", sweep_gens, "generator specs")->required();
  sweep_cmd->add_option("--seed", sweep_seeds, "seeds");
  sweep_cmd->add_option("--algo", sweep_algos, "algorithms")->required();
  sweep_cmd->add_option("--k", sweep_ks, "robot counts")->required();
  sweep_cmd->add_option("--out", out_path, "CSV output file");

  // bounds
  long long bn = 1000;
  int bdepth = 10, bk = 4, bell = 3;
  long long bdelta = 3;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  bounds_cmd->add_option("--n", bn, "node count")->required();
  bounds_cmd->add_option("--depth", bdepth, "depth")->required();
  bounds_cmd->add_option("--k", bk, "robot count")->required();
  bounds_cmd->add_option("--delta", bdelta, "max degree")->required();
  bounds_cmd->add_option("--ell-max", bell, "largest recursion parameter");

  // verify
  auto* verify = app.add_subcommand("verify", "re-audit a saved trace");
  verify->add_option("--input", input, "world file")->required();
  verify->add_option("--trace", trace_path, "JSONL trace")->required();
  verify->add_option("--k", k, "robot count")->required();
  verify->add_option("--algo", algo_name, "algorithm the trace came from");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_spec, grid_spec, obstacles, seed, out_path);
    if (run_cmd->parsed())
      return cmd_run(input, gen_spec, grid_spec, obstacles, algo_name, k, ell, model, mask_spec,
                     seed, trace_path, summary_path);
    if (game->parsed()) return cmd_game(k, delta, adversary, init, seed);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_gens, sweep_seeds, sweep_algos, sweep_ks, out_path);
    if (bounds_cmd->parsed()) return cmd_bounds(bn, bdepth, bk, bdelta, bell);
    if (verify->parsed()) return cmd_verify(input, trace_path, k, algo_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
