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

#include "cotex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cotex {

double min_log(long long max_degree, long long k) {
  return std::min(std::log(static_cast<double>(std::max<long long>(max_degree, 1))),
                  std::log(static_cast<double>(std::max<long long>(k, 1))));
}

double bfdn_bound(long long n, int depth, long long max_degree, int k) {
  const double d = depth;
  return 2.0 * static_cast<double>(n) / k + d * d * (min_log(max_degree, k) + 2.0);
}

double reanchor_depth_bound(int k, long long max_degree) {
  return k * (min_log(max_degree, k) + 2.0);
}

double game_length_bound(int k, int delta) {
  return k * min_log(delta, k) + k;
}

double breakdown_bound(long long n, int depth, int k) {
  const double d = depth;
  return 2.0 * static_cast<double>(n) / k + d * d * (std::log(static_cast<double>(k)) + 2.0);
}

double bfdn_ell_bound(long long n, int depth, long long max_degree, int k, int ell) {
  const double kroot = std::pow(static_cast<double>(k), 1.0 / ell);
  const double mlog = std::min(std::log(static_cast<double>(std::max<long long>(max_degree, 1))),
                               std::log(static_cast<double>(k)) / ell);
  return 4.0 * static_cast<double>(n) / kroot +
         std::pow(2.0, ell + 1) * (ell + 1 + mlog) *
             std::pow(static_cast<double>(depth), 1.0 + 1.0 / ell);
}

double shallow_efficiency_budget(long long max_degree, int k, int ell, int stage_depth) {
  const double kroot = std::pow(static_cast<double>(k), 1.0 / ell);
  const double c1 = std::min(std::log(static_cast<double>(std::max<long long>(max_degree, 1))),
                             std::log(std::max(kroot, 1.0))) +
                    2.0;
  const double cl = c1 + ell - 1;
  return cl * std::pow(static_cast<double>(stage_depth), 1.0 + 1.0 / ell);
}

double offline_bound(long long n, int depth, int k) {
  const long long per_robot = (n - 1 + k - 1) / k;
  return 2.0 * (static_cast<double>(per_robot) + depth);
}

double offline_lower_bound(long long n, int depth, int k) {
  return std::max(2.0 * static_cast<double>(n) / k, 2.0 * depth);
}

std::vector<BoundRow> bound_table(long long n, int depth, int k, long long max_degree,
                                  int ell_max) {
  std::vector<BoundRow> rows;
  rows.push_back({"bfdn", bfdn_bound(n, depth, max_degree, k), false});
  for (int ell = 1; ell <= ell_max; ++ell) {
    rows.push_back({"bfdn_ell:" + std::to_string(ell),
                    bfdn_ell_bound(n, depth, max_degree, k, ell), false});
  }
  rows.push_back({"offline", 2.0 * (static_cast<double>(n) / k + depth), false});
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].bound < rows[best].bound) best = i;
  }
  rows[best].best = true;
  rows.push_back({"offline_lower_bound", offline_lower_bound(n, depth, k), false});
  return rows;
}

std::string format_bound_table(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "algorithm,bound,best\n";
  for (const auto& row : rows) {
    out << row.algorithm << "," << row.bound << "," << (row.best ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace cotex
