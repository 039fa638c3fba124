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

#include "discnep/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace discnep {
namespace {

// Largest accepted bound magnitude; every lattice coordinate stays an exact
// double.
constexpr std::int64_t kMaxAbsBound = std::int64_t{1} << 50;

std::string player_tag(std::size_t nu) {
  return "player " + std::to_string(nu) + ": ";
}

void validate_player(const PlayerData& p, std::size_t nu, std::size_t n) {
  const auto m = p.size();
  const auto tag = player_tag(nu);
  if (m == 0) throw ModelError(tag + "empty strategy block");
  if (static_cast<std::size_t>(p.Q.rows()) != m ||
      static_cast<std::size_t>(p.Q.cols()) != m) {
    throw ModelError(tag + "Q must be " + std::to_string(m) + "x" +
                     std::to_string(m));
  }
  if (static_cast<std::size_t>(p.C.rows()) != m && !(n == m && p.C.size() == 0)) {
    throw ModelError(tag + "C must have " + std::to_string(m) + " rows");
  }
  if (static_cast<std::size_t>(p.C.cols()) != n - m) {
    throw ModelError(tag + "C must have " + std::to_string(n - m) +
                     " columns, got " + std::to_string(p.C.cols()));
  }
  if (p.l.size() != m || p.u.size() != m) {
    throw ModelError(tag + "bounds must have length " + std::to_string(m));
  }
  if (!p.Q.allFinite() || !p.C.allFinite() || !p.b.allFinite()) {
    throw ModelError(tag + "non-finite coefficient");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (p.l[i] == kNegInf || p.u[i] == kPosInf) {
      throw ModelError(tag + "unbounded box");
    }
    if (std::abs(p.l[i]) > kMaxAbsBound || std::abs(p.u[i]) > kMaxAbsBound) {
      throw ModelError(tag + "bound magnitude too large");
    }
    if (p.l[i] > p.u[i]) {
      throw ModelError(tag + "empty box on coordinate " + std::to_string(i));
    }
    if (!(p.Q(i, i) > 0.0)) {
      throw ModelError(tag + "Q diagonal must be strictly positive");
    }
  }
  const double scale = std::max(1.0, p.Q.cwiseAbs().maxCoeff());
  if ((p.Q - p.Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ModelError(tag + "Q must be symmetric");
  }
}

}  // namespace

IntPoint Point::to_int() const {
  IntPoint out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out[i] = static_cast<std::int64_t>(std::llround(coords[i]));
  }
  return out;
}

Point Point::from_int(std::span<const std::int64_t> x) {
  Point p;
  p.coords.assign(x.begin(), x.end());
  p.integral = true;
  return p;
}

IntBox::IntBox(std::vector<std::int64_t> lo_, std::vector<std::int64_t> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) {
    throw std::invalid_argument("IntBox: lo/hi dimension mismatch");
  }
}

IntBox IntBox::whole(std::size_t n) {
  return IntBox(std::vector<std::int64_t>(n, kNegInf),
                std::vector<std::int64_t>(n, kPosInf));
}

bool IntBox::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) return true;
  }
  return false;
}

bool IntBox::finite() const {
  return std::none_of(lo.begin(), lo.end(), [](auto v) { return v == kNegInf; }) &&
         std::none_of(hi.begin(), hi.end(), [](auto v) { return v == kPosInf; });
}

bool IntBox::contains(std::span<const std::int64_t> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

bool IntBox::contains(std::span<const double> x) const {
  if (x.size() != lo.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (lo[i] != kNegInf && x[i] < static_cast<double>(lo[i])) return false;
    if (hi[i] != kPosInf && x[i] > static_cast<double>(hi[i])) return false;
  }
  return true;
}

std::string to_string(const IntBox& box) {
  std::ostringstream os;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (i) os << " x ";
    os << '[';
    if (box.lo[i] == kNegInf) os << "-inf"; else os << box.lo[i];
    os << ',';
    if (box.hi[i] == kPosInf) os << "+inf"; else os << box.hi[i];
    os << ']';
  }
  return os.str();
}

Problem::Problem(std::vector<PlayerData> players) : players_(std::move(players)) {
  if (players_.empty()) throw ModelError("problem has no players");
  for (const auto& p : players_) n_ += p.size();

  offsets_.reserve(players_.size());
  std::size_t start = 0;
  for (std::size_t nu = 0; nu < players_.size(); ++nu) {
    auto& p = players_[nu];
    // An empty C for a single player may arrive as 0x0.
    if (p.C.size() == 0) p.C.resize(static_cast<Eigen::Index>(p.size()), 0);
    validate_player(p, nu, n_);
    offsets_.push_back(start);
    for (std::size_t i = 0; i < p.size(); ++i) {
      owner_.push_back(nu);
      lower_.push_back(p.l[i]);
      upper_.push_back(p.u[i]);
    }
    start += p.size();
  }
  matrix_ = assemble_matrix(*this);
}

const PlayerData& Problem::player(std::size_t nu) const {
  if (nu >= players_.size()) {
    throw std::out_of_range("player index " + std::to_string(nu) +
                            " out of range");
  }
  return players_[nu];
}

Eigen::VectorXd others(const Problem& problem, std::size_t nu,
                       std::span<const double> x) {
  const auto off = problem.offset(nu);
  const auto m = problem.block_size(nu);
  Eigen::VectorXd out(static_cast<Eigen::Index>(problem.dim() - m));
  Eigen::Index k = 0;
  for (std::size_t g = 0; g < problem.dim(); ++g) {
    if (g >= off && g < off + m) continue;
    out[k++] = x[g];
  }
  return out;
}

double theta(const Problem& problem, std::size_t nu, std::span<const double> x) {
  if (x.size() != problem.dim()) {
    throw std::invalid_argument("theta: profile has wrong dimension");
  }
  const auto& p = problem.player(nu);
  const auto off = static_cast<Eigen::Index>(problem.offset(nu));
  const auto m = static_cast<Eigen::Index>(p.size());
  Eigen::Map<const Eigen::VectorXd> full(x.data(), static_cast<Eigen::Index>(x.size()));
  const Eigen::VectorXd own = full.segment(off, m);
  const Eigen::VectorXd lin = p.C * others(problem, nu, x) + p.b;
  return 0.5 * own.dot(p.Q * own) + lin.dot(own);
}

double theta(const Problem& problem, std::size_t nu,
             std::span<const std::int64_t> x) {
  std::vector<double> xd(x.begin(), x.end());
  return theta(problem, nu, std::span<const double>(xd));
}

Eigen::VectorXd eval_F(const Problem& problem, std::span<const double> x) {
  if (x.size() != problem.dim()) {
    throw std::invalid_argument("eval_F: profile has wrong dimension");
  }
  const auto& gm = problem.matrix();
  Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  return gm.M * v + gm.bhat;
}

GameMatrix assemble_matrix(const Problem& problem) {
  const auto n = static_cast<Eigen::Index>(problem.dim());
  GameMatrix gm{Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n)};
  for (std::size_t nu = 0; nu < problem.num_players(); ++nu) {
    const auto& p = problem.player(nu);
    const auto off = static_cast<Eigen::Index>(problem.offset(nu));
    const auto m = static_cast<Eigen::Index>(p.size());
    gm.M.block(off, off, m, m) = p.Q;
    gm.bhat.segment(off, m) = p.b;
    // Columns of C walk the other players' variables in ascending order.
    Eigen::Index col = 0;
    for (Eigen::Index g = 0; g < n; ++g) {
      if (g >= off && g < off + m) continue;
      gm.M.block(off, g, m, 1) = p.C.col(col++);
    }
  }
  return gm;
}

BigCount count_points(const IntBox& box) {
  if (box.empty()) return 0;
  if (!box.finite()) {
    throw std::domain_error("count_points: box has an infinite side");
  }
  BigCount total = 1;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    total *= BigCount(box.hi[i]) - BigCount(box.lo[i]) + 1;
  }
  return total;
}

bool value_less(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a < b - kValueTieTol * scale;
}

}  // namespace discnep
