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


#include "discnep/branching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>

#include "discnep/pruning.hpp"

namespace discnep {
namespace {

class BranchSearch {
 public:
  BranchSearch(const Problem& problem, const BranchOptions& opts, bool stop_at_first)
      : problem_(problem), opts_(opts), stop_at_first_(stop_at_first) {}

  SolveResult run(const IntBox& root) {
    result_.stats.feasible_total = count_points(problem_.bounds());
    if (!root.empty()) list_.push_back(root);
    while (!list_.empty()) {
      if (opts_.max_nodes != 0 && result_.stats.nodes_processed >= opts_.max_nodes) {
        result_.complete = false;
        break;
      }
      IntBox node;
      if (opts_.discipline == ListDiscipline::kFifo) {
        node = std::move(list_.front());
        list_.pop_front();
      } else {
        node = std::move(list_.back());
        list_.pop_back();
      }
      ++result_.stats.nodes_processed;
      process(node);
      if (stop_at_first_ && !found_.empty()) {
        result_.complete = list_.empty();
        break;
      }
    }
    result_.equilibria.assign(found_.begin(), found_.end());
    result_.stats.eq_count = result_.equilibria.size();
    return std::move(result_);
  }

 private:
  void push(std::optional<IntBox> child) {
    if (child) list_.push_back(std::move(*child));
  }

  void test(const IntPoint& x) {
    ++result_.stats.oracle_calls_total;
    if (!tested_.insert(x).second) return;
    auto& stats = result_.stats;
    ++stats.oracle_calls_unique;
    if (is_equilibrium(problem_, x, opts_.oracle)) {
      found_.insert(x);
      if (!stats.oracle_calls_at_first) stats.oracle_calls_at_first = stats.oracle_calls_unique;
      stats.oracle_calls_at_last = stats.oracle_calls_unique;
    }
  }

  void enumerate_node(const IntBox& Y) {
    ++result_.stats.fallback_enumerations;
    IntPoint x = Y.lo;
    const std::size_t n = Y.dim();
    while (true) {
      test(x);
      if (stop_at_first_ && !found_.empty()) return;
      std::size_t k = n;
      while (k-- > 0) {
        if (x[k] < Y.hi[k]) {
          ++x[k];
          break;
        }
        x[k] = Y.lo[k];
      }
      if (k == static_cast<std::size_t>(-1)) return;
    }
  }

  void split_widest(const IntBox& Y) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < Y.dim(); ++i) {
      if (Y.width(i) > Y.width(best)) best = i;
    }
    const std::int64_t mid = Y.lo[best] + (Y.hi[best] - Y.lo[best]) / 2;
    IntBox left = Y;
    left.hi[best] = mid;
    IntBox right = Y;
    right.lo[best] = mid + 1;
    list_.push_back(std::move(left));
    list_.push_back(std::move(right));
  }

  void process(const IntBox& Y) {
    auto& stats = result_.stats;
    ++stats.continuous_solves;
    const auto sol = solve_continuous(problem_, Y, opts_.continuous);
    if (!sol.converged) {
      // No certified continuous solution: settle the node without pruning.
      ++stats.continuous_failures;
      const bool small = count_points(Y) <= opts_.oracle.budget;
      if (small) {
        enumerate_node(Y);
      } else {
        split_widest(Y);
      }
      notify({Y, nullptr, nullptr, small});
      return;
    }

    const Point xbar = round_near_integers(sol.x.coords, opts_.round_eps);
    const IntBox B = fixing_box(problem_, Y, xbar);
    const auto base = box_intersect(Y, B);
    stats.points_cut_by_F += count_points(Y) - (base ? count_points(*base) : BigCount(0));

    if (xbar.integral) {
      const IntPoint x = xbar.to_int();
      test(x);
      if (base) {
        for (const auto& piece : complement_boxes(x)) push(box_intersect(*base, piece));
      }
    } else if (base) {
      const std::size_t i = select_branch_index(xbar);
      IntBox up = IntBox::whole(Y.dim());
      up.lo[i] = static_cast<std::int64_t>(std::ceil(xbar.coords[i]));
      IntBox down = IntBox::whole(Y.dim());
      down.hi[i] = static_cast<std::int64_t>(std::floor(xbar.coords[i]));
      push(box_intersect(*base, up));
      push(box_intersect(*base, down));
    }
    notify({Y, &xbar, &B, false});
  }

  void notify(const NodeEvent& ev) {
    if (opts_.on_node) opts_.on_node(ev);
  }

  const Problem& problem_;
  const BranchOptions& opts_;
  bool stop_at_first_;
  std::deque<IntBox> list_;
  std::set<IntPoint> tested_;
  std::set<IntPoint> found_;
  SolveResult result_;
};

SolveResult run_improved(const Problem& problem, const BranchOptions& opts,
                         bool stop_at_first) {
  ShrinkResult shrink = shrink_fixed_point(problem);
  const IntBox root = shrink.box();
  SolveResult res = BranchSearch(problem, opts, stop_at_first).run(root);
  res.stats.points_cut_by_shrink = res.stats.feasible_total - count_points(root);
  res.shrink = std::move(shrink);
  return res;
}

}  // namespace

SolveResult solve_all(const Problem& problem, const BranchOptions& opts) {
  return BranchSearch(problem, opts, false).run(problem.bounds());
}

SolveResult solve_all_improved(const Problem& problem, const BranchOptions& opts) {
  return run_improved(problem, opts, false);
}

SolveResult solve_one(const Problem& problem, const BranchOptions& opts,
                      bool improved) {
  if (improved) return run_improved(problem, opts, true);
  return BranchSearch(problem, opts, true).run(problem.bounds());
}

std::size_t select_branch_index(const Point& xbar) {
  for (std::size_t i = 0; i < xbar.coords.size(); ++i) {
    if (xbar.coords[i] != std::floor(xbar.coords[i])) return i;
  }
  throw std::invalid_argument("select_branch_index: point is integral");
}

std::string format_percent(const BigCount& part, const BigCount& total) {
  if (total == 0 || part == 0) return "0.00";
  // Hundredths of a percent, rounded half up.
  const BigCount hundredths = (part * 20000 + total) / (2 * total);
  if (hundredths == 0) return "<0.01";
  const BigCount whole = hundredths / 100;
  const auto frac = (hundredths % 100).convert_to<unsigned>();
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02u", frac);
  return whole.str() + "." + buf;
}

}  // namespace discnep
