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


#ifndef DISCNEP_INTEGER_QUADRATIC_HPP_
#define DISCNEP_INTEGER_QUADRATIC_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "discnep/model.hpp"

namespace discnep {

// Thrown when an exact search would need more work than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegerQuadraticMin {
  // Every integer minimizer (ties per value_less), sorted lexicographically.
  std::vector<IntPoint> argmins;
  double value = 0.0;
  // Points or search nodes visited.
  std::uint64_t work = 0;
};

// Exact minimization of f(y) = 1/2 y'Hy + g'y over the integer points of the
// finite box [lo, hi], H symmetric with positive diagonal.
//
// One variable is solved in closed form. When H is positive definite the
// lattice is searched depth-first on the Cholesky factor, visiting only
// points whose partial quadratic form stays below the incumbent. Otherwise
// every point is enumerated. `budget` caps the visited points or nodes.
IntegerQuadraticMin minimize_integer_quadratic(const Eigen::MatrixXd& H,
                                               const Eigen::VectorXd& g,
                                               std::span<const std::int64_t> lo,
                                               std::span<const std::int64_t> hi,
                                               std::uint64_t budget);

// Plain enumeration of every point; used as a reference and as the fallback
// for indefinite H.
IntegerQuadraticMin enumerate_integer_quadratic(const Eigen::MatrixXd& H,
                                                const Eigen::VectorXd& g,
                                                std::span<const std::int64_t> lo,
                                                std::span<const std::int64_t> hi,
                                                std::uint64_t budget);

}  // namespace discnep

#endif  // DISCNEP_INTEGER_QUADRATIC_HPP_
