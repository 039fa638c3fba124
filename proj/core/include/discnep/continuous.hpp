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


#ifndef DISCNEP_CONTINUOUS_HPP_
#define DISCNEP_CONTINUOUS_HPP_

#include <cstddef>
#include <span>

#include "discnep/model.hpp"

namespace discnep {

inline constexpr double kDefaultRoundEps = 1e-10;

struct ContinuousOptions {
  double tol = 1e-8;
  std::size_t max_iter = 200000;
  // Every this many iterations the current active set is used to try an
  // exact solve of the reduced linear system. 0 disables it.
  std::size_t polish_every = 32;
};

struct ContinuousSolution {
  Point x;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Solves the continuous relaxation of the game restricted to `box`, i.e. the
// affine variational inequality
//
//   find x in box with F(x)'(y - x) >= 0 for all y in box,
//
// by the extragradient method. Convergence is guaranteed when the symmetric
// part of M is positive semidefinite; otherwise the iteration is attempted
// and `converged` reports the outcome. The box must be finite and non-empty.
ContinuousSolution solve_continuous(const Problem& problem, const IntBox& box,
                                    const ContinuousOptions& opts = {});

// || x - P_box(x - F(x)) ||_inf, with P_box the componentwise clamp.
double natural_residual(const Problem& problem, const IntBox& box,
                        std::span<const double> x);

// Snaps coordinates within eps of an integer. The result is flagged integral
// iff every coordinate snapped.
Point round_near_integers(std::span<const double> x, double eps = kDefaultRoundEps);

}  // namespace discnep

#endif  // DISCNEP_CONTINUOUS_HPP_
