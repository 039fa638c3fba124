// Copyright 2026 The discnep Authors.
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


#ifndef DISCNEP_BRANCHING_HPP_
#define DISCNEP_BRANCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "discnep/continuous.hpp"
#include "discnep/model.hpp"
#include "discnep/oracle.hpp"
#include "discnep/shrink.hpp"

namespace discnep {

enum class ListDiscipline { kFifo, kLifo };

// Snapshot handed to BranchOptions::on_node after a node is processed.
struct NodeEvent {
  const IntBox& box;
  // Rounded continuous solution; null when the continuous solve failed.
  const Point* xbar;
  // Fixing box B; null when the continuous solve failed.
  const IntBox* fixing;
  // The node was settled by enumerating all of its points.
  bool enumerated;
};

struct BranchOptions {
  ListDiscipline discipline = ListDiscipline::kFifo;
  ContinuousOptions continuous;
  double round_eps = kDefaultRoundEps;
  // 0 means unlimited. When hit, the result is flagged incomplete.
  std::uint64_t max_nodes = 0;
  OracleOptions oracle;
  std::function<void(const NodeEvent&)> on_node;
};

struct SearchStats {
  std::uint64_t eq_count = 0;
  std::uint64_t oracle_calls_total = 0;
  std::uint64_t oracle_calls_unique = 0;
  // Unique oracle calls made up to and including the first/last equilibrium.
  std::optional<std::uint64_t> oracle_calls_at_first;
  std::optional<std::uint64_t> oracle_calls_at_last;
  std::uint64_t nodes_processed = 0;
  BigCount points_cut_by_shrink = 0;
  BigCount points_cut_by_F = 0;
  BigCount feasible_total = 0;
  std::uint64_t continuous_solves = 0;
  std::uint64_t continuous_failures = 0;
  std::uint64_t fallback_enumerations = 0;
};

struct SolveResult {
  std::vector<IntPoint> equilibria;  // lexicographically sorted
  SearchStats stats;
  // The search list was exhausted, so `equilibria` is the full set (or, for
  // solve_one with no result, a proof that none exists).
  bool complete = true;
  // Bounds used to seed the search; set by the improved variants only.
  std::optional<ShrinkResult> shrink;
};

// Complete enumeration of the equilibrium set by branching over boxes,
// starting from the full feasible box.
SolveResult solve_all(const Problem& problem, const BranchOptions& opts = {});

// As solve_all, seeded with the box from shrink_fixed_point.
SolveResult solve_all_improved(const Problem& problem, const BranchOptions& opts = {});

// Stops at the first confirmed equilibrium.
SolveResult solve_one(const Problem& problem, const BranchOptions& opts = {},
                      bool improved = false);

// Lowest-index fractional coordinate. Throws std::invalid_argument on an
// integral point.
std::size_t select_branch_index(const Point& xbar);

// 100 * part / total with two decimals; "<0.01" for nonzero values below
// 0.005.
std::string format_percent(const BigCount& part, const BigCount& total);

}  // namespace discnep

#endif  // DISCNEP_BRANCHING_HPP_
