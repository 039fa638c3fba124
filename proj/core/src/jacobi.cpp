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


#include "discnep/jacobi.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace discnep {
namespace {

// Selection order key: larger is preferred.
bool prefer(const IntPoint& a, const IntPoint& b, std::span<const Group> groups) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    const bool up = groups[i] == Group::kG1;
    return up ? a[i] > b[i] : a[i] < b[i];
  }
  return false;
}

bool moves_monotonically(std::span<const std::int64_t> from,
                         std::span<const std::int64_t> to,
                         std::span<const Group> groups) {
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (groups[i] == Group::kG1 && to[i] < from[i]) return false;
    if (groups[i] == Group::kG2 && to[i] > from[i]) return false;
  }
  return true;
}

struct Response {
  IntPoint block;
  double value;
};

class Iteration {
 public:
  Iteration(const Problem& problem, const Partition& partition,
            const JacobiOptions& opts, JacobiResult& result)
      : problem_(problem), groups_(partition.group), opts_(opts), result_(result) {}

  Response respond(std::size_t nu, const IntPoint& x) {
    ++result_.best_response_calls;
    const auto br = best_response_at(problem_, nu, x, opts_.oracle);
    const auto off = problem_.offset(nu);
    const auto m = problem_.block_size(nu);
    const std::span<const Group> g(groups_.data() + off, m);
    const std::span<const std::int64_t> current(x.data() + off, m);

    const IntPoint* pick = nullptr;
    bool pick_monotone = false;
    for (const auto& cand : br.argmins) {
      const bool mono = moves_monotonically(current, cand, g);
      if (pick == nullptr || (mono && !pick_monotone) ||
          (mono == pick_monotone && prefer(cand, *pick, g))) {
        pick = &cand;
        pick_monotone = mono;
      }
    }
    return {*pick, br.value};
  }

  void apply(std::size_t nu, const IntPoint& block, IntPoint& x) const {
    std::copy(block.begin(), block.end(), x.begin() + static_cast<std::ptrdiff_t>(problem_.offset(nu)));
  }

 private:
  const Problem& problem_;
  const std::vector<Group>& groups_;
  const JacobiOptions& opts_;
  JacobiResult& result_;
};

}  // namespace

std::vector<std::size_t> Partition::members(Group which) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (group[i] == which) out.push_back(i);
  }
  return out;
}

bool is_valid_partition(const Problem& problem, const Partition& partition) {
  const auto n = problem.dim();
  if (partition.group.size() != n) return false;
  const auto& M = problem.matrix().M;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double a = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const bool same = partition.group[i] == partition.group[j];
      if (same && a > 0.0) return false;
      if (!same && a < 0.0) return false;
    }
  }
  return true;
}

PartitionDetection detect_partition(const Problem& problem) {
  const auto n = problem.dim();
  const auto& M = problem.matrix().M;
  // parity 1: different groups, 0: same group.
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double b = M(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
      const bool pos = a > 0.0 || b > 0.0;
      const bool neg = a < 0.0 || b < 0.0;
      if (pos && neg) return {std::nullopt, std::make_pair(i, j)};
      if (pos || neg) {
        const int parity = pos ? 1 : 0;
        adj[i].emplace_back(j, parity);
        adj[j].emplace_back(i, parity);
      }
    }
  }
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> todo;
    todo.push(s);
    while (!todo.empty()) {
      const auto v = todo.front();
      todo.pop();
      for (const auto& [w, parity] : adj[v]) {
        const int want = colour[v] ^ parity;
        if (colour[w] == -1) {
          colour[w] = want;
          todo.push(w);
        } else if (colour[w] != want) {
          return {std::nullopt, std::make_pair(std::min(v, w), std::max(v, w))};
        }
      }
    }
  }
  Partition p;
  p.group.reserve(n);
  for (int c : colour) p.group.push_back(c == 0 ? Group::kG1 : Group::kG2);
  return {std::move(p), std::nullopt};
}

Partition first_row_partition(const Problem& problem) {
  const auto n = problem.dim();
  const auto& M = problem.matrix().M;
  Partition p;
  p.group.assign(n, Group::kG1);
  for (std::size_t j = 1; j < n; ++j) {
    if (M(0, static_cast<Eigen::Index>(j)) > 0.0) p.group[j] = Group::kG2;
  }
  return p;
}

std::optional<Schedule> parse_schedule(const std::string& name) {
  if (name == "gauss-seidel") return Schedule::kGaussSeidel;
  if (name == "jacobi") return Schedule::kJacobi;
  if (name == "gauss-southwell") return Schedule::kGaussSouthwell;
  return std::nullopt;
}

std::string to_string(Schedule schedule) {
  switch (schedule) {
    case Schedule::kGaussSeidel: return "gauss-seidel";
    case Schedule::kJacobi: return "jacobi";
    case Schedule::kGaussSouthwell: return "gauss-southwell";
  }
  return "unknown";
}

std::size_t fairness_window(const Problem& problem, Schedule schedule) {
  return schedule == Schedule::kJacobi ? 1 : problem.num_players();
}

std::uint64_t step_bound(const Problem& problem, std::size_t h) {
  if (h == 0) throw std::invalid_argument("step_bound: h must be positive");
  BigCount range = 0;
  for (std::size_t i = 0; i < problem.dim(); ++i) {
    range += BigCount(problem.upper()[i]) - BigCount(problem.lower()[i]);
  }
  const BigCount bound = BigCount(h) * range + h;
  if (bound > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return bound.convert_to<std::uint64_t>();
}

JacobiResult jacobi_solve(const Problem& problem, const Partition& partition,
                          const JacobiOptions& opts) {
  const auto n = problem.dim();
  const auto players = problem.num_players();
  if (partition.group.size() != n) {
    throw std::invalid_argument("jacobi_solve: partition has wrong dimension");
  }
  const std::size_t window = fairness_window(problem, opts.schedule);
  const std::uint64_t max_steps =
      opts.max_steps.value_or(step_bound(problem, window));

  JacobiResult result;
  Iteration iter(problem, partition, opts, result);

  IntPoint x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = partition.group[i] == Group::kG1 ? problem.lower()[i] : problem.upper()[i];
  }
  if (opts.record_trace) result.trace.push_back(x);

  auto advance = [&](const IntPoint& next) {
    if (!moves_monotonically(x, next, partition.group)) result.monotone = false;
    const bool changed = next != x;
    x = next;
    ++result.steps;
    if (opts.record_trace) result.trace.push_back(x);
    return changed;
  };

  bool stalled = false;
  std::size_t unchanged = 0;
  std::size_t turn = 0;
  while (!stalled && result.steps < max_steps) {
    switch (opts.schedule) {
      case Schedule::kGaussSeidel: {
        IntPoint next = x;
        iter.apply(turn, iter.respond(turn, x).block, next);
        turn = (turn + 1) % players;
        unchanged = advance(next) ? 0 : unchanged + 1;
        stalled = unchanged >= window;
        break;
      }
      case Schedule::kJacobi: {
        IntPoint next = x;
        for (std::size_t nu = 0; nu < players; ++nu) {
          iter.apply(nu, iter.respond(nu, x).block, next);
        }
        stalled = !advance(next);
        break;
      }
      case Schedule::kGaussSouthwell: {
        std::optional<std::size_t> chosen;
        double best_gain = -std::numeric_limits<double>::infinity();
        IntPoint best_block;
        for (std::size_t nu = 0; nu < players; ++nu) {
          auto r = iter.respond(nu, x);
          const auto off = static_cast<std::ptrdiff_t>(problem.offset(nu));
          if (std::equal(r.block.begin(), r.block.end(), x.begin() + off)) continue;
          const double gain = theta(problem, nu, x) - r.value;
          if (!chosen || gain > best_gain) {
            chosen = nu;
            best_gain = gain;
            best_block = std::move(r.block);
          }
        }
        if (!chosen) {
          stalled = true;
          break;
        }
        IntPoint next = x;
        iter.apply(*chosen, best_block, next);
        advance(next);
        break;
      }
    }
  }

  result.sweeps = opts.schedule == Schedule::kGaussSeidel
                      ? (result.steps + players - 1) / players
                      : result.steps;
  if (is_equilibrium(problem, x, opts.oracle)) result.equilibrium = x;
  return result;
}

}  // namespace discnep
