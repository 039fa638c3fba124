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


#ifndef DISCNEP_PRUNING_HPP_
#define DISCNEP_PRUNING_HPP_

#include <optional>
#include <span>
#include <vector>

#include "discnep/model.hpp"

namespace discnep {

// Box B such that Y \ B holds no equilibrium of the game, built from a
// solution xbar of the continuous game restricted to Y.
//
// Variable g is fixed at its lower bound of Y when xbar_g sits on that bound
// and every coupling in row g of M points the same way: each j with
// M_gj > 0 sits at its lower bound and each j with M_gj < 0 at its upper
// bound. Then raising x_g strictly worsens the owner's objective at every
// integer point of Y, so only x_g <= lo_g survives. The upper-bound rule is
// the mirror image. Bound tests are exact; xbar should already be rounded.
// Returns R^n when nothing fires.
IntBox fixing_box(const Problem& problem, const IntBox& Y, const Point& xbar);

// The 2n disjoint boxes covering Z^n minus xbar:
//   out[2j]   = {x_t = xbar_t for t < j, x_j >= xbar_j + 1}
//   out[2j+1] = {x_t = xbar_t for t < j, x_j <= xbar_j - 1}
std::vector<IntBox> complement_boxes(std::span<const std::int64_t> xbar);

// Componentwise intersection; nullopt when empty.
std::optional<IntBox> box_intersect(const IntBox& a, const IntBox& b);

}  // namespace discnep

#endif  // DISCNEP_PRUNING_HPP_
