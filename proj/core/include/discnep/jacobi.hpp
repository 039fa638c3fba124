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


#ifndef DISCNEP_JACOBI_HPP_
#define DISCNEP_JACOBI_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discnep/model.hpp"
#include "discnep/oracle.hpp"

namespace discnep {

enum class Group : std::uint8_t { kG1, kG2 };

// Assignment of every global variable index to G1 or G2.
struct Partition {
  std::vector<Group> group;

  std::vector<std::size_t> members(Group which) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Checks the sign pattern on M: off-diagonal entries are <= 0 inside a group
// and >= 0 across groups.
bool is_valid_partition(const Problem& problem, const Partition& partition);

struct PartitionDetection {
  std::optional<Partition> partition;
  // A pair (i, j) whose entries M_ij, M_ji demand both the same and
  // different groups, or that closes an odd cycle of constraints.
  std::optional<std::pair<std::size_t, std::size_t>> conflict;
};

// Exact two-colouring of the sign constraints: any positive M_ij or M_ji
// forces i and j apart, any negative one forces them together. Index 0 of
// each connected component lands in G1.
PartitionDetection detect_partition(const Problem& problem);

// Index 0 in G1; j joins G2 iff M_0j > 0. No validity guarantee.
Partition first_row_partition(const Problem& problem);

enum class Schedule { kGaussSeidel, kJacobi, kGaussSouthwell };

std::optional<Schedule> parse_schedule(const std::string& name);
std::string to_string(Schedule schedule);

// Maximum number of steps between two plays of the same player.
std::size_t fairness_window(const Problem& problem, Schedule schedule);

// h * sum_i (u_i - l_i) + h.
std::uint64_t step_bound(const Problem& problem, std::size_t h);

struct JacobiOptions {
  Schedule schedule = Schedule::kGaussSeidel;
  // Defaults to step_bound(problem, fairness_window(problem, schedule)).
  std::optional<std::uint64_t> max_steps;
  OracleOptions oracle;
  bool record_trace = true;
};

struct JacobiResult {
  std::optional<IntPoint> equilibrium;
  // Number of updates (one per application of the schedule).
  std::uint64_t steps = 0;
  // Full passes over the players; equals steps for the Jacobi schedule.
  std::uint64_t sweeps = 0;
  std::uint64_t best_response_calls = 0;
  // G1 coordinates never decreased and G2 coordinates never increased.
  bool monotone = true;
  std::vector<IntPoint> trace;  // x^0, x^1, ...
};

// G1 variables start at their lower bounds, G2 at their upper bounds. Each
// played player moves to a best response that, among the exact argmin set,
// keeps G1 coordinates from decreasing and G2 coordinates from increasing
// when such a choice exists, breaking remaining ties by largest G1 block and
// smallest G2 block lexicographically. Stops once a full fairness window
// leaves the profile unchanged; the returned point has passed
// is_equilibrium. Hitting max_steps yields no equilibrium, which proves
// nothing unless the partition is valid.
JacobiResult jacobi_solve(const Problem& problem, const Partition& partition,
                          const JacobiOptions& opts = {});

}  // namespace discnep

#endif  // DISCNEP_JACOBI_HPP_
