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


#include "discnep/shrink.hpp"

#include <cmath>

namespace discnep {
namespace {

// theta of g's owner as a function of x_g alone, up to a constant.
struct LineObjective {
  double curvature;
  double slope;

  double operator()(std::int64_t t) const {
    const double td = static_cast<double>(t);
    return td * (0.5 * curvature * td + slope);
  }
};

LineObjective line_objective(const Problem& problem, std::size_t g,
                             std::span<const std::int64_t> z) {
  const auto& gm = problem.matrix();
  const auto r = static_cast<Eigen::Index>(g);
  double slope = gm.bhat[r];
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == g) continue;
    slope += gm.M(r, static_cast<Eigen::Index>(j)) * static_cast<double>(z[j]);
  }
  return {gm.M(r, r), slope};
}

std::int64_t clamp_to(double t, std::int64_t lo, std::int64_t hi) {
  if (!(t > static_cast<double>(lo))) return lo;
  if (t >= static_cast<double>(hi)) return hi;
  return static_cast<std::int64_t>(t);
}

// z for the sweep over variable g: coordinates that push F_g down when they
// grow are read at their current sweep value y, the others at `far`.
void fill_z(const Problem& problem, std::size_t g,
            std::span<const std::int64_t> y, std::span<const std::int64_t> far,
            std::vector<std::int64_t>& z) {
  const auto& M = problem.matrix().M;
  const auto r = static_cast<Eigen::Index>(g);
  for (std::size_t j = 0; j < y.size(); ++j) {
    z[j] = M(r, static_cast<Eigen::Index>(j)) <= 0.0 ? y[j] : far[j];
  }
}

std::vector<std::int64_t> sweep(const Problem& problem,
                                std::span<const std::int64_t> l,
                                std::span<const std::int64_t> u,
                                SweepDirection dir) {
  const std::size_t n = problem.dim();
  if (l.size() != n || u.size() != n) {
    throw std::invalid_argument("shrink: bound vectors have wrong dimension");
  }
  const bool lower = dir == SweepDirection::kLower;
  std::vector<std::int64_t> y(lower ? l.begin() : u.begin(), lower ? l.end() : u.end());
  const std::span<const std::int64_t> far = lower ? u : l;
  std::vector<std::int64_t> z(n);
  while (true) {
    const std::vector<std::int64_t> w = y;
    for (std::size_t g = 0; g < n; ++g) {
      fill_z(problem, g, y, far, z);
      y[g] = lower ? one_dim_argmin(problem, g, z, y[g], u[g], dir)
                   : one_dim_argmin(problem, g, z, l[g], y[g], dir);
    }
    if (w == y) return y;
  }
}

}  // namespace

std::int64_t one_dim_argmin(const Problem& problem, std::size_t g,
                            std::span<const std::int64_t> z, std::int64_t lo,
                            std::int64_t hi, SweepDirection dir) {
  if (lo > hi) throw std::invalid_argument("one_dim_argmin: lo > hi");
  if (z.size() != problem.dim()) {
    throw std::invalid_argument("one_dim_argmin: z has wrong dimension");
  }
  if (lo == hi) return lo;
  const LineObjective f = line_objective(problem, g, z);
  const double vertex = -f.slope / f.curvature;

  if (dir == SweepDirection::kLower) {
    std::int64_t s = clamp_to(std::ceil(vertex - 0.5), lo, hi);
    // Step down while s - 1 is not strictly worse than s.
    while (s > lo && !value_less(f(s), f(s - 1))) --s;
    while (s < hi && value_less(f(s + 1), f(s))) ++s;
    return s;
  }
  std::int64_t s = clamp_to(std::floor(vertex + 0.5), lo, hi);
  while (s < hi && !value_less(f(s), f(s + 1))) ++s;
  while (s > lo && value_less(f(s - 1), f(s))) --s;
  return s;
}

std::vector<std::int64_t> shrink_lower(const Problem& problem,
                                       std::span<const std::int64_t> l,
                                       std::span<const std::int64_t> u) {
  return sweep(problem, l, u, SweepDirection::kLower);
}

std::vector<std::int64_t> shrink_upper(const Problem& problem,
                                       std::span<const std::int64_t> l,
                                       std::span<const std::int64_t> u) {
  return sweep(problem, l, u, SweepDirection::kUpper);
}

ShrinkResult shrink_fixed_point(const Problem& problem) {
  ShrinkResult res{problem.lower(), problem.upper(), 0};
  while (true) {
    ++res.rounds;
    auto l = shrink_lower(problem, res.lower, res.upper);
    auto u = shrink_upper(problem, l, res.upper);
    const bool changed = l != res.lower || u != res.upper;
    res.lower = std::move(l);
    res.upper = std::move(u);
    if (!changed) return res;
  }
}

}  // namespace discnep
