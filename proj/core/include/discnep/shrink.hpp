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


#ifndef DISCNEP_SHRINK_HPP_
#define DISCNEP_SHRINK_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "discnep/model.hpp"

namespace discnep {

enum class SweepDirection { kLower, kUpper };

// Integer line search along variable g with every other coordinate read from
// z. For kLower, returns the smallest s in [lo, hi] with
// theta(s) <= theta(s + 1) (or s = hi), so theta(s - 1) > theta(s) holds
// strictly. For kUpper, the largest s with theta(s - 1) >= theta(s) (or
// s = lo). Near-ties resolve toward the more conservative bound.
std::int64_t one_dim_argmin(const Problem& problem, std::size_t g,
                            std::span<const std::int64_t> z, std::int64_t lo,
                            std::int64_t hi, SweepDirection dir);

// Gauss-Seidel sweeps raising l until a sweep changes nothing. Every
// equilibrium inside [l, u] stays above the result.
std::vector<std::int64_t> shrink_lower(const Problem& problem,
                                       std::span<const std::int64_t> l,
                                       std::span<const std::int64_t> u);

// Mirror image of shrink_lower.
std::vector<std::int64_t> shrink_upper(const Problem& problem,
                                       std::span<const std::int64_t> l,
                                       std::span<const std::int64_t> u);

struct ShrinkResult {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::size_t rounds = 0;

  IntBox box() const { return IntBox(lower, upper); }
};

// Alternates shrink_lower and shrink_upper, each fed the other's latest
// bounds, until neither moves.
ShrinkResult shrink_fixed_point(const Problem& problem);

}  // namespace discnep

#endif  // DISCNEP_SHRINK_HPP_
