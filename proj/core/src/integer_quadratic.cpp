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


#include "discnep/integer_quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace discnep {
namespace {

double quad_value(const Eigen::MatrixXd& H, const Eigen::VectorXd& g,
                  std::span<const std::int64_t> y) {
  const auto m = static_cast<Eigen::Index>(y.size());
  double v = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double yi = static_cast<double>(y[static_cast<std::size_t>(i)]);
    double row = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      row += H(i, j) * static_cast<double>(y[static_cast<std::size_t>(j)]);
    }
    v += yi * (0.5 * row + g[i]);
  }
  return v;
}

// Running argmin with tie retention.
class ArgminCollector {
 public:
  void offer(const IntPoint& y, double v) {
    if (v < best_) {
      best_ = v;
      std::erase_if(candidates_, [&](const auto& c) { return value_less(best_, c.second); });
    }
    if (!value_less(best_, v)) candidates_.emplace_back(y, v);
  }

  double best() const { return best_; }

  IntegerQuadraticMin finish(std::uint64_t work) {
    IntegerQuadraticMin out;
    out.value = best_;
    out.work = work;
    for (auto& [y, v] : candidates_) {
      if (!value_less(best_, v)) out.argmins.push_back(std::move(y));
    }
    std::sort(out.argmins.begin(), out.argmins.end());
    return out;
  }

 private:
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<std::pair<IntPoint, double>> candidates_;
};

void check_inputs(const Eigen::MatrixXd& H, const Eigen::VectorXd& g,
                  std::span<const std::int64_t> lo,
                  std::span<const std::int64_t> hi) {
  const auto m = static_cast<std::size_t>(g.size());
  if (static_cast<std::size_t>(H.rows()) != m || static_cast<std::size_t>(H.cols()) != m ||
      lo.size() != m || hi.size() != m) {
    throw std::invalid_argument("integer quadratic: dimension mismatch");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (lo[i] == kNegInf || hi[i] == kPosInf) {
      throw std::invalid_argument("integer quadratic: box must be finite");
    }
    if (lo[i] > hi[i]) throw std::invalid_argument("integer quadratic: empty box");
  }
}

IntegerQuadraticMin minimize_scalar(double h, double g, std::int64_t lo,
                                    std::int64_t hi) {
  const double vertex = -g / h;
  const auto clampi = [&](double t) {
    if (t <= static_cast<double>(lo)) return lo;
    if (t >= static_cast<double>(hi)) return hi;
    return static_cast<std::int64_t>(t);
  };
  const std::int64_t a = clampi(std::floor(vertex));
  const std::int64_t b = clampi(std::ceil(vertex));
  ArgminCollector col;
  const auto f = [&](std::int64_t t) {
    const double td = static_cast<double>(t);
    return td * (0.5 * h * td + g);
  };
  col.offer(IntPoint{a}, f(a));
  if (b != a) col.offer(IntPoint{b}, f(b));
  return col.finish(a == b ? 1 : 2);
}

class LatticeSearch {
 public:
  LatticeSearch(const Eigen::MatrixXd& H, const Eigen::VectorXd& g,
                const Eigen::LLT<Eigen::MatrixXd>& llt,
                std::span<const std::int64_t> lo,
                std::span<const std::int64_t> hi, std::uint64_t budget)
      : H_(H), g_(g), R_(llt.matrixU()), lo_(lo), hi_(hi), budget_(budget),
        m_(static_cast<std::size_t>(g.size())), y_(m_), d_(m_),
        center_(llt.solve(-g)), fmin_(0.5 * g.dot(center_)) {}

  IntegerQuadraticMin run() {
    descend(m_ - 1, 0.0);
    return col_.finish(work_);
  }

 private:
  // Largest partial form that can still reach the incumbent, with slack so
  // that rounding in the factorization never prunes a tie.
  double radius() const {
    const double best = col_.best();
    if (!std::isfinite(best)) return std::numeric_limits<double>::infinity();
    const double slack = 1e-7 * std::max({1.0, std::abs(best), std::abs(fmin_)});
    return 2.0 * (best - fmin_ + slack);
  }

  void visit() {
    if (++work_ > budget_) {
      throw BudgetExceeded("best response search exceeded budget of " +
                           std::to_string(budget_) + " nodes");
    }
  }

  void descend(std::size_t level, double partial) {
    const auto li = static_cast<Eigen::Index>(level);
    double s = 0.0;
    for (std::size_t j = level + 1; j < m_; ++j) {
      s += R_(li, static_cast<Eigen::Index>(j)) * d_[j];
    }
    const double rii = R_(li, li);
    const double c = center_[li] - s / rii;
    const std::int64_t lo = lo_[level];
    const std::int64_t hi = hi_[level];
    std::int64_t start;
    if (c <= static_cast<double>(lo)) {
      start = lo;
    } else if (c >= static_cast<double>(hi)) {
      start = hi;
    } else {
      start = std::clamp<std::int64_t>(std::llround(c), lo, hi);
    }

    std::int64_t up = start;
    std::int64_t down = start - 1;
    bool up_open = true;
    bool down_open = down >= lo;
    while (up_open || down_open) {
      std::int64_t t;
      bool take_up;
      if (up_open && down_open) {
        take_up = std::abs(static_cast<double>(up) - c) <=
                  std::abs(static_cast<double>(down) - c);
      } else {
        take_up = up_open;
      }
      t = take_up ? up : down;
      const double diff = static_cast<double>(t) - c;
      const double next = partial + rii * rii * diff * diff;
      if (next > radius()) {
        if (take_up) up_open = false; else down_open = false;
        continue;
      }
      visit();
      y_[level] = t;
      d_[level] = static_cast<double>(t) - center_[li];
      if (level == 0) {
        col_.offer(y_, quad_value(H_, g_, y_));
      } else {
        descend(level - 1, next);
      }
      if (take_up) {
        if (++up > hi) up_open = false;
      } else {
        if (--down < lo) down_open = false;
      }
    }
  }

  const Eigen::MatrixXd& H_;
  const Eigen::VectorXd& g_;
  Eigen::MatrixXd R_;
  std::span<const std::int64_t> lo_;
  std::span<const std::int64_t> hi_;
  std::uint64_t budget_;
  std::size_t m_;
  IntPoint y_;
  std::vector<double> d_;
  Eigen::VectorXd center_;
  double fmin_ = 0.0;
  std::uint64_t work_ = 0;
  ArgminCollector col_;
};

}  // namespace

IntegerQuadraticMin enumerate_integer_quadratic(const Eigen::MatrixXd& H,
                                                const Eigen::VectorXd& g,
                                                std::span<const std::int64_t> lo,
                                                std::span<const std::int64_t> hi,
                                                std::uint64_t budget) {
  check_inputs(H, g, lo, hi);
  const IntBox box(std::vector<std::int64_t>(lo.begin(), lo.end()),
                   std::vector<std::int64_t>(hi.begin(), hi.end()));
  if (count_points(box) > budget) {
    throw BudgetExceeded("enumeration of " + count_points(box).str() +
                         " points exceeds budget of " + std::to_string(budget));
  }
  const std::size_t m = lo.size();
  IntPoint y(lo.begin(), lo.end());
  ArgminCollector col;
  std::uint64_t work = 0;
  while (true) {
    ++work;
    col.offer(y, quad_value(H, g, y));
    std::size_t i = 0;
    while (i < m && y[i] == hi[i]) {
      y[i] = lo[i];
      ++i;
    }
    if (i == m) break;
    ++y[i];
  }
  return col.finish(work);
}

IntegerQuadraticMin minimize_integer_quadratic(const Eigen::MatrixXd& H,
                                               const Eigen::VectorXd& g,
                                               std::span<const std::int64_t> lo,
                                               std::span<const std::int64_t> hi,
                                               std::uint64_t budget) {
  check_inputs(H, g, lo, hi);
  if (g.size() == 1) return minimize_scalar(H(0, 0), g[0], lo[0], hi[0]);

  Eigen::LLT<Eigen::MatrixXd> llt(H);
  if (llt.info() == Eigen::Success) {
    const Eigen::MatrixXd R = llt.matrixU();
    const double dmin = R.diagonal().minCoeff();
    const double dmax = R.diagonal().maxCoeff();
    if (dmin > 1e-6 * dmax) {
      return LatticeSearch(H, g, llt, lo, hi, budget).run();
    }
  }
  return enumerate_integer_quadratic(H, g, lo, hi, budget);
}

}  // namespace discnep
