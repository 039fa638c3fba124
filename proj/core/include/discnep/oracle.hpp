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


#ifndef DISCNEP_ORACLE_HPP_
#define DISCNEP_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "discnep/integer_quadratic.hpp"
#include "discnep/model.hpp"

namespace discnep {

struct OracleOptions {
  // Work cap per best-response computation and per enumeration call.
  std::uint64_t budget = 10'000'000;
  // Threads used by enumerate_equilibria.
  unsigned workers = 1;
};

struct BestResponseSet {
  std::vector<IntPoint> argmins;  // lexicographically sorted
  double value = 0.0;
};

// Exact integer best responses of player nu against x_others (the stacked
// other blocks), over `player_box` (dimension n_nu). Ties are all kept.
BestResponseSet best_response(const Problem& problem, std::size_t nu,
                              std::span<const double> x_others,
                              const IntBox& player_box,
                              const OracleOptions& opts = {});

// Same, reading x^{-nu} from a full profile and using the player's full box.
BestResponseSet best_response_at(const Problem& problem, std::size_t nu,
                                 std::span<const std::int64_t> profile,
                                 const OracleOptions& opts = {});

// True iff every player's block is a best response over its ORIGINAL box,
// whatever sub-box the caller is exploring.
bool is_equilibrium(const Problem& problem, std::span<const std::int64_t> x,
                    const OracleOptions& opts = {});

// Every equilibrium lying in `box`, sorted lexicographically. Deviations are
// always tested against the full feasible set.
std::vector<IntPoint> enumerate_equilibria(const Problem& problem,
                                           const IntBox& box,
                                           const OracleOptions& opts = {});

}  // namespace discnep

#endif  // DISCNEP_ORACLE_HPP_
