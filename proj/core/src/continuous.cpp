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


#include "discnep/continuous.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace discnep {
namespace {

struct RealBox {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  explicit RealBox(const IntBox& box)
      : lo(static_cast<Eigen::Index>(box.dim())), hi(static_cast<Eigen::Index>(box.dim())) {
    for (std::size_t i = 0; i < box.dim(); ++i) {
      lo[static_cast<Eigen::Index>(i)] = static_cast<double>(box.lo[i]);
      hi[static_cast<Eigen::Index>(i)] = static_cast<double>(box.hi[i]);
    }
  }

  Eigen::VectorXd project(const Eigen::VectorXd& v) const {
    return v.cwiseMax(lo).cwiseMin(hi);
  }
};

double residual_at(const RealBox& box, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& fx) {
  return (x - box.project(x - fx)).lpNorm<Eigen::Infinity>();
}

// Guesses the active set from the projected step and solves the reduced
// system M_FF x_F = -(bhat_F + M_FA x_A) for the free block.
std::optional<Eigen::VectorXd> active_set_solve(const GameMatrix& gm,
                                                const RealBox& box,
                                                const Eigen::VectorXd& x,
                                                const Eigen::VectorXd& fx) {
  Eigen::VectorXd y = box.project(x - fx);
  std::vector<Eigen::Index> free;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] > box.lo[i] && y[i] < box.hi[i]) free.push_back(i);
  }
  if (free.empty()) return y;

  const auto k = static_cast<Eigen::Index>(free.size());
  Eigen::MatrixXd a(k, k);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto gr = free[static_cast<std::size_t>(r)];
    rhs[r] = -gm.bhat[gr];
    for (Eigen::Index c = 0; c < y.size(); ++c) {
      rhs[r] -= gm.M(gr, c) * y[c];
    }
    for (Eigen::Index c = 0; c < k; ++c) {
      const auto gc = free[static_cast<std::size_t>(c)];
      a(r, c) = gm.M(gr, gc);
      // Undo the contribution of the free coordinates included above.
      rhs[r] += gm.M(gr, gc) * y[gc];
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) return std::nullopt;
  const Eigen::VectorXd z = lu.solve(rhs);
  for (Eigen::Index r = 0; r < k; ++r) {
    const auto gr = free[static_cast<std::size_t>(r)];
    if (!std::isfinite(z[r]) || z[r] < box.lo[gr] || z[r] > box.hi[gr]) {
      return std::nullopt;
    }
    y[gr] = z[r];
  }
  return y;
}

}  // namespace

ContinuousSolution solve_continuous(const Problem& problem, const IntBox& box,
                                    const ContinuousOptions& opts) {
  if (box.dim() != problem.dim()) {
    throw std::invalid_argument("solve_continuous: box has wrong dimension");
  }
  if (box.empty() || !box.finite()) {
    throw std::invalid_argument("solve_continuous: box must be finite and non-empty");
  }
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("solve_continuous: tol must be positive");
  }

  const auto& gm = problem.matrix();
  const RealBox rbox(box);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gm.M);
  const double lipschitz = svd.singularValues()(0);
  // Strictly below 1/L.
  const double step = 0.9 / lipschitz;

  Eigen::VectorXd x = 0.5 * (rbox.lo + rbox.hi);
  ContinuousSolution sol;

  auto finish = [&](const Eigen::VectorXd& v, double res, std::size_t it, bool ok) {
    sol.x.coords.assign(v.data(), v.data() + v.size());
    sol.x.integral = false;
    sol.residual = res;
    sol.iterations = it;
    sol.converged = ok;
    return sol;
  };

  // Returns the polished point when it beats `current_res`.
  auto try_polish = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& fv,
                        double current_res) -> std::optional<std::pair<Eigen::VectorXd, double>> {
    auto cand = active_set_solve(gm, rbox, v, fv);
    if (!cand) return std::nullopt;
    const Eigen::VectorXd fc = gm.M * *cand + gm.bhat;
    const double rc = residual_at(rbox, *cand, fc);
    if (rc <= current_res) return std::make_pair(*cand, rc);
    return std::nullopt;
  };

  for (std::size_t it = 0;; ++it) {
    const Eigen::VectorXd fx = gm.M * x + gm.bhat;
    const double res = residual_at(rbox, x, fx);
    if (res <= opts.tol) {
      if (auto p = try_polish(x, fx, res)) return finish(p->first, p->second, it, true);
      return finish(x, res, it, true);
    }
    if (opts.polish_every > 0 && it > 0 && it % opts.polish_every == 0) {
      if (auto p = try_polish(x, fx, opts.tol)) {
        return finish(p->first, p->second, it, true);
      }
    }
    if (it >= opts.max_iter) {
      if (auto p = try_polish(x, fx, opts.tol)) {
        return finish(p->first, p->second, it, true);
      }
      return finish(x, res, it, false);
    }
    const Eigen::VectorXd y = rbox.project(x - step * fx);
    const Eigen::VectorXd fy = gm.M * y + gm.bhat;
    x = rbox.project(x - step * fy);
  }
}

double natural_residual(const Problem& problem, const IntBox& box,
                        std::span<const double> x) {
  const RealBox rbox(box);
  Eigen::Map<const Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(x.size()));
  const Eigen::VectorXd fx = eval_F(problem, x);
  return residual_at(rbox, v, fx);
}

Point round_near_integers(std::span<const double> x, double eps) {
  if (eps < 0.0) throw std::invalid_argument("round_near_integers: eps < 0");
  Point p;
  p.coords.assign(x.begin(), x.end());
  p.integral = true;
  for (auto& c : p.coords) {
    const double r = std::nearbyint(c);
    if (std::abs(c - r) <= eps) {
      c = r;
    } else {
      p.integral = false;
    }
  }
  return p;
}

}  // namespace discnep
