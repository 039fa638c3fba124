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


#include "discnep/oracle.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace discnep {
namespace {

// Linear term C x_others + b for player nu, read straight from the game
// matrix rows.
Eigen::VectorXd linear_term(const Problem& problem, std::size_t nu,
                            std::span<const std::int64_t> profile) {
  const auto& gm = problem.matrix();
  const auto off = problem.offset(nu);
  const auto m = problem.block_size(nu);
  Eigen::VectorXd g(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = static_cast<Eigen::Index>(off + i);
    double acc = gm.bhat[r];
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (j >= off && j < off + m) continue;
      acc += gm.M(r, static_cast<Eigen::Index>(j)) * static_cast<double>(profile[j]);
    }
    g[static_cast<Eigen::Index>(i)] = acc;
  }
  return g;
}

double own_value(const Eigen::MatrixXd& Q, const Eigen::VectorXd& g,
                 std::span<const std::int64_t> own) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(own.size()));
  for (std::size_t i = 0; i < own.size(); ++i) {
    y[static_cast<Eigen::Index>(i)] = static_cast<double>(own[i]);
  }
  return y.dot(0.5 * (Q * y) + g);
}

void enumerate_range(const Problem& problem, const IntBox& box,
                     std::uint64_t first, std::uint64_t last,
                     const OracleOptions& opts, std::vector<IntPoint>& out) {
  const std::size_t n = box.dim();
  IntPoint x(n);
  // Decode the mixed-radix index of `first`; coordinate 0 varies slowest so
  // that ranges come out in lexicographic order.
  std::uint64_t rem = first;
  for (std::size_t k = n; k-- > 0;) {
    const auto w = static_cast<std::uint64_t>(box.width(k));
    x[k] = box.lo[k] + static_cast<std::int64_t>(rem % w);
    rem /= w;
  }
  for (std::uint64_t idx = first; idx < last; ++idx) {
    if (is_equilibrium(problem, x, opts)) out.push_back(x);
    for (std::size_t k = n; k-- > 0;) {
      if (x[k] < box.hi[k]) {
        ++x[k];
        break;
      }
      x[k] = box.lo[k];
    }
  }
}

}  // namespace

BestResponseSet best_response(const Problem& problem, std::size_t nu,
                              std::span<const double> x_others,
                              const IntBox& player_box,
                              const OracleOptions& opts) {
  const auto& p = problem.player(nu);
  if (x_others.size() != problem.dim() - p.size()) {
    throw std::invalid_argument("best_response: x_others has wrong dimension");
  }
  if (player_box.dim() != p.size()) {
    throw std::invalid_argument("best_response: player box has wrong dimension");
  }
  Eigen::Map<const Eigen::VectorXd> xo(x_others.data(),
                                       static_cast<Eigen::Index>(x_others.size()));
  const Eigen::VectorXd g = p.C * xo + p.b;
  auto res = minimize_integer_quadratic(p.Q, g, player_box.lo, player_box.hi,
                                        opts.budget);
  return {std::move(res.argmins), res.value};
}

BestResponseSet best_response_at(const Problem& problem, std::size_t nu,
                                 std::span<const std::int64_t> profile,
                                 const OracleOptions& opts) {
  const auto& p = problem.player(nu);
  if (profile.size() != problem.dim()) {
    throw std::invalid_argument("best_response_at: profile has wrong dimension");
  }
  const Eigen::VectorXd g = linear_term(problem, nu, profile);
  auto res = minimize_integer_quadratic(p.Q, g, p.l, p.u, opts.budget);
  return {std::move(res.argmins), res.value};
}

bool is_equilibrium(const Problem& problem, std::span<const std::int64_t> x,
                    const OracleOptions& opts) {
  if (x.size() != problem.dim()) {
    throw std::invalid_argument("is_equilibrium: profile has wrong dimension");
  }
  if (!problem.bounds().contains(x)) return false;
  for (std::size_t nu = 0; nu < problem.num_players(); ++nu) {
    const auto& p = problem.player(nu);
    const Eigen::VectorXd g = linear_term(problem, nu, x);
    const auto own = x.subspan(problem.offset(nu), p.size());
    const auto best = minimize_integer_quadratic(p.Q, g, p.l, p.u, opts.budget);
    if (value_less(best.value, own_value(p.Q, g, own))) return false;
  }
  return true;
}

std::vector<IntPoint> enumerate_equilibria(const Problem& problem,
                                           const IntBox& box,
                                           const OracleOptions& opts) {
  if (box.dim() != problem.dim()) {
    throw std::invalid_argument("enumerate_equilibria: box has wrong dimension");
  }
  if (box.empty()) return {};
  const BigCount total = count_points(box);
  if (total > opts.budget) {
    throw BudgetExceeded("enumeration of " + total.str() +
                         " points exceeds budget of " + std::to_string(opts.budget));
  }
  const auto count = total.convert_to<std::uint64_t>();
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(opts.workers, 1, count));
  std::vector<std::vector<IntPoint>> parts(workers);
  if (workers == 1) {
    enumerate_range(problem, box, 0, count, opts, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      const std::uint64_t chunk = (count + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t first = std::min<std::uint64_t>(count, w * chunk);
        const std::uint64_t last = std::min<std::uint64_t>(count, first + chunk);
        pool.emplace_back([&, w, first, last] {
          try {
            enumerate_range(problem, box, first, last, opts, parts[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<IntPoint> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace discnep
