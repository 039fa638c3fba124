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


#include "discnep/pruning.hpp"

#include <algorithm>

namespace discnep {
namespace {

bool at(double v, std::int64_t bound) {
  return bound != kNegInf && bound != kPosInf && v == static_cast<double>(bound);
}

}  // namespace

IntBox fixing_box(const Problem& problem, const IntBox& Y, const Point& xbar) {
  const std::size_t n = problem.dim();
  if (Y.dim() != n || xbar.size() != n) {
    throw std::invalid_argument("fixing_box: dimension mismatch");
  }
  const auto& M = problem.matrix().M;
  const auto& x = xbar.coords;
  IntBox B = IntBox::whole(n);

  for (std::size_t g = 0; g < n; ++g) {
    const auto r = static_cast<Eigen::Index>(g);
    if (!(M(r, r) > 0.0)) continue;

    // Lower side: raising x_g only increases F_g.
    bool fire = at(x[g], Y.lo[g]);
    for (std::size_t j = 0; fire && j < n; ++j) {
      if (j == g) continue;
      const double a = M(r, static_cast<Eigen::Index>(j));
      if (a > 0.0 && !at(x[j], Y.lo[j])) fire = false;
      if (a < 0.0 && !at(x[j], Y.hi[j])) fire = false;
    }
    if (fire) {
      B.hi[g] = std::min(B.hi[g], Y.lo[g]);
      continue;
    }

    fire = at(x[g], Y.hi[g]);
    for (std::size_t j = 0; fire && j < n; ++j) {
      if (j == g) continue;
      const double a = M(r, static_cast<Eigen::Index>(j));
      if (a > 0.0 && !at(x[j], Y.hi[j])) fire = false;
      if (a < 0.0 && !at(x[j], Y.lo[j])) fire = false;
    }
    if (fire) B.lo[g] = std::max(B.lo[g], Y.hi[g]);
  }
  return B;
}

std::vector<IntBox> complement_boxes(std::span<const std::int64_t> xbar) {
  const std::size_t n = xbar.size();
  std::vector<IntBox> out;
  out.reserve(2 * n);
  IntBox prefix = IntBox::whole(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntBox above = prefix;
    above.lo[j] = xbar[j] + 1;
    IntBox below = prefix;
    below.hi[j] = xbar[j] - 1;
    out.push_back(std::move(above));
    out.push_back(std::move(below));
    prefix.lo[j] = prefix.hi[j] = xbar[j];
  }
  return out;
}

std::optional<IntBox> box_intersect(const IntBox& a, const IntBox& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("box_intersect: dimension mismatch");
  }
  IntBox out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out.lo[i] = std::max(a.lo[i], b.lo[i]);
    out.hi[i] = std::min(a.hi[i], b.hi[i]);
    if (out.lo[i] > out.hi[i]) return std::nullopt;
  }
  return out;
}

}  // namespace discnep
