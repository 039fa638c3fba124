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

#ifndef DISCNEP_MODEL_HPP_
#define DISCNEP_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace discnep {

// Integer strategy profile. Players' blocks are stacked in ascending order.
using IntPoint = std::vector<std::int64_t>;

// Arbitrary-precision count of lattice points.
using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

// Raised when instance data violates a structural invariant.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A real strategy profile, with a flag recording that every coordinate is an
// exact integer.
struct Point {
  std::vector<double> coords;
  bool integral = false;

  std::size_t size() const { return coords.size(); }
  IntPoint to_int() const;
  static Point from_int(std::span<const std::int64_t> x);
};

// Axis-aligned integer box. Either side of a coordinate may be infinite
// (kNegInf / kPosInf).
struct IntBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  IntBox() = default;
  IntBox(std::vector<std::int64_t> lo_, std::vector<std::int64_t> hi_);

  // R^n.
  static IntBox whole(std::size_t n);

  std::size_t dim() const { return lo.size(); }
  bool empty() const;
  bool finite() const;
  bool contains(std::span<const std::int64_t> x) const;
  bool contains(std::span<const double> x) const;

  // Width of coordinate i; requires a finite, non-empty side.
  std::int64_t width(std::size_t i) const { return hi[i] - lo[i] + 1; }

  friend bool operator==(const IntBox&, const IntBox&) = default;
};

std::string to_string(const IntBox& box);

// Quadratic data of one player:
//   theta(x) = 1/2 x_own' Q x_own + (C x_others + b)' x_own
// with x_others the concatenation of the other players' blocks in ascending
// player order.
struct PlayerData {
  Eigen::MatrixXd Q;
  Eigen::MatrixXd C;
  Eigen::VectorXd b;
  std::vector<std::int64_t> l;
  std::vector<std::int64_t> u;

  std::size_t size() const { return static_cast<std::size_t>(b.size()); }
};

// Pseudo-gradient operator F(x) = M x + bhat of the whole game. M carries the
// Q blocks on the diagonal and the C blocks off it.
struct GameMatrix {
  Eigen::MatrixXd M;
  Eigen::VectorXd bhat;
};

class Problem {
 public:
  // Validates every invariant; throws ModelError on violation.
  explicit Problem(std::vector<PlayerData> players);

  std::size_t num_players() const { return players_.size(); }
  std::size_t dim() const { return n_; }

  const PlayerData& player(std::size_t nu) const;
  const std::vector<PlayerData>& players() const { return players_; }

  // Start of player nu's block inside the stacked profile.
  std::size_t offset(std::size_t nu) const { return offsets_.at(nu); }
  std::size_t block_size(std::size_t nu) const { return player(nu).size(); }

  // Owner of global variable index g.
  std::size_t owner(std::size_t g) const { return owner_.at(g); }

  const GameMatrix& matrix() const { return matrix_; }
  const std::vector<std::int64_t>& lower() const { return lower_; }
  const std::vector<std::int64_t>& upper() const { return upper_; }

  // The feasible box X.
  IntBox bounds() const { return IntBox(lower_, upper_); }

 private:
  std::vector<PlayerData> players_;
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
  std::vector<std::int64_t> lower_;
  std::vector<std::int64_t> upper_;
  GameMatrix matrix_;
};

// x^{-nu}: every coordinate outside player nu's block, in ascending order.
Eigen::VectorXd others(const Problem& problem, std::size_t nu,
                       std::span<const double> x);

double theta(const Problem& problem, std::size_t nu, std::span<const double> x);
double theta(const Problem& problem, std::size_t nu,
             std::span<const std::int64_t> x);

Eigen::VectorXd eval_F(const Problem& problem, std::span<const double> x);

GameMatrix assemble_matrix(const Problem& problem);

// Number of integer points in a finite box; 0 when empty. Throws
// std::domain_error when a non-empty box has an infinite side.
BigCount count_points(const IntBox& box);

// Objective comparisons used wherever equilibria are decided. Two values
// closer than kValueTieTol * max(1, |a|, |b|) count as a tie.
inline constexpr double kValueTieTol = 1e-9;

bool value_less(double a, double b);

}  // namespace discnep

#endif  // DISCNEP_MODEL_HPP_
