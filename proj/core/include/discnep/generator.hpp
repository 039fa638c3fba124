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


#ifndef DISCNEP_GENERATOR_HPP_
#define DISCNEP_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>

#include "discnep/model.hpp"

namespace discnep {

struct GeneratorSpec {
  std::size_t players = 2;
  std::size_t vars_per_player = 1;
  double b_min = -10.0;
  double b_max = 10.0;
  std::int64_t lower = -5;
  std::int64_t upper = 5;
  // Asymmetry level of the cross-player blocks.
  double h = 0.0;
  // Extreme eigenvalues of the symmetric part of M. Both are attained
  // whenever the game has at least two variables.
  double eig_min = 1.0;
  double eig_max = 10.0;
  std::uint64_t seed = 0;
  // Emit a 2-groups partitionable game: intra-group cross terms of M are
  // nonpositive, inter-group ones nonnegative.
  bool two_groups = false;
};

// Throws std::invalid_argument on inconsistent ranges.
void validate(const GeneratorSpec& spec);

// Deterministic in spec (including seed) on a given platform.
Problem generate(const GeneratorSpec& spec);

}  // namespace discnep

#endif  // DISCNEP_GENERATOR_HPP_
