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

#ifndef COTEX_ENGINE_HPP_
#define COTEX_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotex/algorithm.hpp"
#include "cotex/trace.hpp"
#include "cotex/view.hpp"
#include "cotex/world.hpp"

namespace cotex {

/// Per-round, per-robot permission bits. Defaults to all ones. `observe` runs
/// once per round before the `allowed` queries so adaptive adversaries can
/// look at positions and anchors.
class MobilityMask {
 public:
  virtual ~MobilityMask() = default;
  virtual bool allowed(long long round, int robot) const = 0;
  virtual void observe(long long round, const std::vector<NodeId>& positions,
                       const AnchorReport* anchors) {}
  virtual std::string name() const = 0;
};

class AllOnesMask : public MobilityMask {
 public:
  bool allowed(long long, int) const override { return true; }
  std::string name() const override { return "ones"; }
};

class BernoulliMask : public MobilityMask {
 public:
  BernoulliMask(double p, std::uint64_t seed) : p_(p), seed_(seed) {}
  bool allowed(long long round, int robot) const override;
  std::string name() const override;

 private:
  double p_;
  std::uint64_t seed_;
};

/// Exactly one robot may move per round, cycling by index.
class RoundRobinMask : public MobilityMask {
 public:
  explicit RoundRobinMask(int k) : k_(k) {}
  bool allowed(long long round, int robot) const override {
    return (round - 1) % k_ == robot;
  }
  std::string name() const override { return "roundrobin"; }

 private:
  int k_;
};

/// Explicit bit matrix, one row of k bits per round; rows repeat from the
/// last one when the run outlives the matrix.
class MatrixMask : public MobilityMask {
 public:
  MatrixMask(std::vector<std::uint64_t> rows, std::string label)
      : rows_(std::move(rows)), label_(std::move(label)) {
    if (rows_.empty()) rows_.push_back(~0ull);
  }
  bool allowed(long long round, int robot) const override {
    const auto idx = static_cast<std::size_t>(round - 1);
    const std::uint64_t row = idx < rows_.size() ? rows_[idx] : rows_.back();
    return (row >> robot) & 1;
  }
  std::string name() const override { return label_; }

 private:
  std::vector<std::uint64_t> rows_;
  std::string label_;
};

MatrixMask load_mask_file(const std::string& path, int k);

/// Adversary that pins down the most loaded anchor: robots standing on the
/// anchor at depth >= 1 that currently has the most robots assigned are
/// blocked until the whole team has gathered there, then the target is
/// released for good and the next one is picked.
class BlockHeaviestAnchorMask : public MobilityMask {
 public:
  bool allowed(long long round, int robot) const override;
  void observe(long long round, const std::vector<NodeId>& positions,
               const AnchorReport* anchors) override;
  std::string name() const override { return "blockheaviest"; }

 private:
  NodeId target_ = kNoNode;
  std::uint64_t blocked_ = 0;
  std::vector<NodeId> released_;
};

/// (1/k) * sum over rounds 1..up_to_round of the permission bits.
double mean_mobility(const MobilityMask& mask, long long up_to_round, int k);
/// Same from a recorded trace (covers adaptive masks).
double mean_mobility(const RunTrace& trace, long long up_to_round);

struct RoundInfo {
  long long round;
  const ExplorationView& view;
  const std::vector<NodeId>& positions;
  const RoundRecord& record;
  ExplorationAlgorithm& algorithm;
};

struct RunOptions {
  long long round_limit = 0;  // 0: ten times the proven bound
  MobilityMask* mask = nullptr;
  bool throw_on_round_limit = true;
  std::uint64_t seed = 0;  // provenance only, recorded in the summary
  std::function<void(const RoundInfo&)> round_hook;
};

class RoundLimitError : public std::runtime_error {
 public:
  explicit RoundLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Runs the synchronous round loop: query selections for movable robots,
/// move them in parallel, reveal what they found, record the round. Stops
/// when at least one robot could move and none changed position, or at the
/// round limit. On graphs, a robot that crossed a fresh edge into an already
/// discovered or not strictly farther node closes that edge and is forced
/// back where it came from on its next permitted round; backtrack landings
/// reveal nothing.
RunTrace run(const World& world, ExplorationAlgorithm& algorithm, int k,
             const RunOptions& options = {});

}  // namespace cotex

#endif  // COTEX_ENGINE_HPP_
