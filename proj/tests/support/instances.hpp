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


#ifndef DISCNEP_TESTS_SUPPORT_INSTANCES_HPP_
#define DISCNEP_TESTS_SUPPORT_INSTANCES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "discnep/generator.hpp"
#include "discnep/model.hpp"

namespace discnep::testing {

inline PlayerData scalar_player(double q, std::vector<double> c, double b, std::int64_t l,
                                std::int64_t u) {
  PlayerData p;
  p.Q = Eigen::MatrixXd::Constant(1, 1, q);
  p.C.resize(1, static_cast<Eigen::Index>(c.size()));
  for (std::size_t j = 0; j < c.size(); ++j) p.C(0, static_cast<Eigen::Index>(j)) = c[j];
  p.b = Eigen::VectorXd::Constant(1, b);
  p.l = {l};
  p.u = {u};
  return p;
}

inline Problem example1() {
  return Problem({scalar_player(9, {7}, -72, 0, 9), scalar_player(9, {7}, -72, 0, 9)});
}

inline Problem example2() {
  return Problem({scalar_player(1, {1}, -9, 0, 9), scalar_player(1, {-1}, 0, 0, 9)});
}

inline Problem example3() {
  return Problem({scalar_player(0.875, {-1}, 0.5, -1, 2),
                  scalar_player(1, {-0.75}, 0, -1, 2)});
}

inline Problem example4() {
  PlayerData p1;
  p1.Q.resize(2, 2);
  p1.Q << 3, 1, 1, 3;
  p1.C.resize(2, 2);
  p1.C << 4, -3, -1, 1;
  p1.b = Eigen::Vector2d(7, 2);
  p1.l = {-5, -5};
  p1.u = {5, 5};
  PlayerData p2;
  p2.Q.resize(2, 2);
  p2.Q << 2, 1, 1, 2;
  p2.C.resize(2, 2);
  p2.C << 1, -2, -3, 4;
  p2.b = Eigen::Vector2d(5, 6);
  p2.l = {-5, -5};
  p2.u = {5, 5};
  return Problem({p1, p2});
}

// Seeded instance with at most 10^4 feasible points, per-coordinate range at
// most 10, positive definite symmetric part. Odd seeds use h = 0.1, even
// seeds h = 0.01.
inline GeneratorSpec corpus_spec(std::uint64_t seed, bool two_groups = false) {
  static constexpr std::size_t kShapes[][2] = {
      {2, 1}, {3, 1}, {4, 1}, {2, 2}, {5, 1}, {6, 1}, {3, 2}, {2, 3}};
  std::mt19937_64 pick(seed * 0x9E3779B97F4A7C15ULL + 1);
  const auto& shape = kShapes[pick() % std::size(kShapes)];
  const std::size_t n = shape[0] * shape[1];
  const auto cap = static_cast<std::int64_t>(std::floor(std::pow(1e4, 1.0 / n) + 1e-9));
  const std::int64_t width = std::min<std::int64_t>(10, cap);

  GeneratorSpec spec;
  spec.players = shape[0];
  spec.vars_per_player = shape[1];
  spec.lower = -static_cast<std::int64_t>(pick() % 6);
  spec.upper = spec.lower + width - 1;
  spec.h = seed % 2 == 1 ? 0.1 : 0.01;
  spec.eig_min = 0.5 + static_cast<double>(pick() % 100) / 100.0;
  spec.eig_max = spec.eig_min + 1.0 + static_cast<double>(pick() % 2000) / 100.0;
  spec.b_min = -15.0;
  spec.b_max = 15.0;
  spec.seed = seed;
  spec.two_groups = two_groups;
  return spec;
}

inline Problem corpus_instance(std::uint64_t seed, bool two_groups = false) {
  return generate(corpus_spec(seed, two_groups));
}

}  // namespace discnep::testing

#endif  // DISCNEP_TESTS_SUPPORT_INSTANCES_HPP_
