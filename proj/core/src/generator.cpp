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


#include "discnep/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "discnep/jacobi.hpp"

namespace discnep {
namespace {

// Uniform and normal draws with the same output on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  bool coin() { return (engine_() >> 63) != 0; }

  double gaussian() {
    if (spare_) {
      const double out = *spare_;
      spare_.reset();
      return out;
    }
    double u1 = unit();
    while (u1 <= 0.0) u1 = unit();
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

Eigen::VectorXd spectrum(Rng& rng, Eigen::Index n, double lo, double hi) {
  Eigen::VectorXd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d[i] = rng.uniform(lo, hi);
  if (n >= 2) {
    d[0] = lo;
    d[n - 1] = hi;
  }
  return d;
}

Eigen::MatrixXd random_orthogonal(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.gaussian();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

Eigen::MatrixXd symmetric_base(Rng& rng, Eigen::Index n, const GeneratorSpec& spec) {
  const Eigen::MatrixXd q = random_orthogonal(rng, n);
  const Eigen::VectorXd d = spectrum(rng, n, spec.eig_min, spec.eig_max);
  Eigen::MatrixXd m = q * d.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

// D (alpha I - s A) D with A >= 0 symmetric and D = diag(+-1) by group.
Eigen::MatrixXd two_group_base(Rng& rng, Eigen::Index n, const GeneratorSpec& spec) {
  if (n == 1) return Eigen::MatrixXd::Constant(1, 1, spec.eig_min);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) a(i, j) = a(j, i) = rng.unit();
  }
  Eigen::VectorXd sign(n);
  for (Eigen::Index i = 0; i < n; ++i) sign[i] = rng.coin() ? -1.0 : 1.0;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a, Eigen::EigenvaluesOnly);
  const double a_min = eig.eigenvalues()[0];
  const double a_max = eig.eigenvalues()[n - 1];
  const double s = a_max > a_min ? (spec.eig_max - spec.eig_min) / (a_max - a_min) : 0.0;
  const double alpha = spec.eig_max + s * a_min;
  Eigen::MatrixXd m = alpha * Eigen::MatrixXd::Identity(n, n) - s * a;
  return sign.asDiagonal() * m * sign.asDiagonal();
}

}  // namespace

void validate(const GeneratorSpec& spec) {
  if (spec.players == 0) throw std::invalid_argument("generator: players must be positive");
  if (spec.vars_per_player == 0) {
    throw std::invalid_argument("generator: vars_per_player must be positive");
  }
  if (!std::isfinite(spec.h) || spec.h < 0.0) {
    throw std::invalid_argument("generator: h must be a finite value >= 0");
  }
  if (!std::isfinite(spec.eig_min) || !std::isfinite(spec.eig_max) ||
      !(spec.eig_min > 0.0) || spec.eig_min > spec.eig_max) {
    throw std::invalid_argument("generator: need 0 < eig_min <= eig_max");
  }
  if (!std::isfinite(spec.b_min) || !std::isfinite(spec.b_max) || spec.b_min > spec.b_max) {
    throw std::invalid_argument("generator: need b_min <= b_max");
  }
  if (spec.lower > spec.upper) throw std::invalid_argument("generator: need lower <= upper");
}

Problem generate(const GeneratorSpec& spec) {
  validate(spec);
  const auto n = static_cast<Eigen::Index>(spec.players * spec.vars_per_player);
  const auto m = static_cast<Eigen::Index>(spec.vars_per_player);
  Rng rng(spec.seed);

  Eigen::MatrixXd M = spec.two_groups ? two_group_base(rng, n, spec)
                                      : symmetric_base(rng, n, spec);
  const double mmax = M.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (i / m == j / m) continue;
      double v = rng.uniform(-spec.h * mmax, spec.h * mmax);
      if (spec.two_groups) {
        const double cap = std::abs(M(i, j));
        v = std::clamp(v, -cap, cap);
      }
      M(i, j) += v;
      M(j, i) -= v;
    }
  }

  std::vector<PlayerData> players(spec.players);
  for (std::size_t nu = 0; nu < spec.players; ++nu) {
    const auto off = static_cast<Eigen::Index>(nu) * m;
    auto& p = players[nu];
    p.Q = M.block(off, off, m, m);
    p.C.resize(m, n - m);
    Eigen::Index col = 0;
    for (Eigen::Index g = 0; g < n; ++g) {
      if (g >= off && g < off + m) continue;
      p.C.col(col++) = M.block(off, g, m, 1);
    }
    p.b.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) p.b[i] = rng.uniform(spec.b_min, spec.b_max);
    p.l.assign(spec.vars_per_player, spec.lower);
    p.u.assign(spec.vars_per_player, spec.upper);
  }
  Problem problem(std::move(players));
  if (spec.two_groups && !detect_partition(problem).partition) {
    throw std::logic_error("generator: 2-groups instance failed partition detection");
  }
  return problem;
}

}  // namespace discnep
