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

#ifndef COTEX_BOUNDS_HPP_
#define COTEX_BOUNDS_HPP_

#include <string>
#include <vector>

namespace cotex {

// All logarithms are natural.

/// min(ln(max_degree), ln(k)).
double min_log(long long max_degree, long long k);

/// 2n/k + D^2 (min(ln Delta, ln k) + 2): the bfdn runtime guarantee. For
/// graphs pass the edge count as n and the radius as depth.
double bfdn_bound(long long n, int depth, long long max_degree, int k);

/// Per-depth cap on anchor reassignments: k (min(ln k, ln Delta) + 2).
double reanchor_depth_bound(int k, long long max_degree);

/// Urn game length cap for the balancing player: k min(ln Delta, ln k) + k.
double game_length_bound(int k, int delta);

/// Mobility budget after which the breakdown variant must have finished:
/// 2n/k + D^2 (ln k + 2).
double breakdown_bound(long long n, int depth, int k);

/// 4n/k^(1/l) + 2^(l+1) (l + 1 + min(ln Delta, ln(k)/l)) D^(1+1/l).
double bfdn_ell_bound(long long n, int depth, long long max_degree, int k, int ell);

/// Shallow-efficiency budget c_l(k) = c_1(k^(1/l)) + l - 1 with
/// c_1(x) = min(ln Delta, ln x) + 2.
double shallow_efficiency_budget(long long max_degree, int k, int ell, int stage_depth);

/// Offline split of the doubled depth-first tour: 2(ceil((n-1)/k) + D).
double offline_bound(long long n, int depth, int k);
/// Lower bound for returning schedules: max(2n/k, 2D).
double offline_lower_bound(long long n, int depth, int k);

struct BoundRow {
  std::string algorithm;
  double bound = 0.0;
  bool best = false;
};

/// Closed-form comparison table for one (n, D, k, Delta) point; `ell_max`
/// adds one recursive row per ell in 1..ell_max. The offline lower bound row
/// is informational and never flagged best.
std::vector<BoundRow> bound_table(long long n, int depth, int k, long long max_degree,
                                  int ell_max);

std::string format_bound_table(const std::vector<BoundRow>& rows);

}  // namespace cotex

#endif  // COTEX_BOUNDS_HPP_
