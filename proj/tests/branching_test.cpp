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


#include <gtest/gtest.h>

#include "discnep/branching.hpp"
#include "discnep/oracle.hpp"
#include "discnep/pruning.hpp"
#include "support/brute_force.hpp"
#include "support/instances.hpp"

namespace discnep {
namespace {

using testing::example1;
using testing::example2;
using testing::example3;
using testing::example4;

const std::vector<IntPoint> kEx1{{3, 6}, {4, 5}, {5, 4}, {6, 3}};
const std::vector<IntPoint> kEx3{{-1, -1}, {1, 1}, {2, 2}};

TEST(BranchingTest, SolveAllExamples) {
  EXPECT_EQ(solve_all(example1()).equilibria, kEx1);
  const auto r2 = solve_all(example2());
  EXPECT_TRUE(r2.equilibria.empty());
  EXPECT_TRUE(r2.complete);
  EXPECT_EQ(solve_all(example3()).equilibria, kEx3);
}

TEST(BranchingTest, ImprovedExamples) {
  const auto r1 = solve_all_improved(example1());
  EXPECT_EQ(r1.equilibria, kEx1);
  EXPECT_EQ(format_percent(r1.stats.points_cut_by_shrink, r1.stats.feasible_total), "84.00");
  ASSERT_TRUE(r1.shrink.has_value());
  EXPECT_EQ(r1.shrink->lower, (std::vector<std::int64_t>{3, 3}));

  const auto r3 = solve_all_improved(example3());
  EXPECT_EQ(r3.equilibria, kEx3);
  EXPECT_EQ(format_percent(r3.stats.points_cut_by_shrink, r3.stats.feasible_total), "0.00");

  const auto r4 = solve_all_improved(example4());
  EXPECT_EQ(r4.equilibria, (std::vector<IntPoint>{{-5, 4, 5, -5}, {5, -5, -5, 5}}));
}

TEST(BranchingTest, Example1Statistics) {
  const auto r = solve_all_improved(example1());
  const auto& s = r.stats;
  EXPECT_EQ(s.eq_count, 4u);
  EXPECT_EQ(s.feasible_total, BigCount(100));
  EXPECT_EQ(s.points_cut_by_shrink, BigCount(84));
  EXPECT_LE(s.points_cut_by_shrink + s.points_cut_by_F + s.oracle_calls_unique,
            s.feasible_total);
  ASSERT_TRUE(s.oracle_calls_at_first && s.oracle_calls_at_last);
  EXPECT_LE(*s.oracle_calls_at_first, *s.oracle_calls_at_last);
  EXPECT_LE(*s.oracle_calls_at_last, s.oracle_calls_unique);
}

TEST(BranchingTest, SolveOne) {
  const auto r1 = solve_one(example1());
  ASSERT_EQ(r1.equilibria.size(), 1u);
  EXPECT_TRUE(is_equilibrium(example1(), r1.equilibria[0]));

  const auto r2 = solve_one(example2());
  EXPECT_TRUE(r2.equilibria.empty());
  EXPECT_TRUE(r2.complete);

  const Problem single({testing::scalar_player(1, {0}, 0, 2, 2),
                        testing::scalar_player(1, {0}, 0, -1, -1)});
  EXPECT_EQ(solve_one(single).equilibria, (std::vector<IntPoint>{{2, -1}}));
  EXPECT_EQ(solve_one(example1(), {}, true).equilibria.size(), 1u);
}

TEST(BranchingTest, SelectBranchIndex) {
  Point a;
  a.coords = {4.5, 4.5};
  EXPECT_EQ(select_branch_index(a), 0u);
  Point b;
  b.coords = {3, 2.2};
  EXPECT_EQ(select_branch_index(b), 1u);
  EXPECT_THROW(select_branch_index(Point::from_int(IntPoint{3, 6})), std::invalid_argument);
}

TEST(BranchingTest, FormatPercent) {
  EXPECT_EQ(format_percent(84, 100), "84.00");
  EXPECT_EQ(format_percent(0, 100), "0.00");
  EXPECT_EQ(format_percent(1, 16), "6.25");
  EXPECT_EQ(format_percent(1, 30000), "<0.01");
  EXPECT_EQ(format_percent(1, 20000), "0.01");
  EXPECT_EQ(format_percent(2, 3), "66.67");
  EXPECT_EQ(format_percent(100, 100), "100.00");
}

TEST(BranchingTest, NodeLimitFlagsIncomplete) {
  BranchOptions opts;
  opts.max_nodes = 2;
  const auto r = solve_all(example1(), opts);
  EXPECT_FALSE(r.complete);
  EXPECT_LE(r.stats.nodes_processed, 2u);
}

TEST(BranchingTest, MatchesBruteForceAndDisciplinesAgree) {
  BranchOptions lifo;
  lifo.discipline = ListDiscipline::kLifo;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Problem p = testing::corpus_instance(seed);
    const auto want = testing::brute_equilibria(p.players());
    const auto fifo_r = solve_all(p);
    EXPECT_TRUE(fifo_r.complete);
    EXPECT_EQ(fifo_r.equilibria, want) << "seed " << seed;
    EXPECT_EQ(solve_all(p, lifo).equilibria, want) << "seed " << seed;
    EXPECT_EQ(solve_all_improved(p).equilibria, want) << "seed " << seed;
    const auto one = solve_one(p);
    if (want.empty()) {
      EXPECT_TRUE(one.equilibria.empty());
    } else {
      ASSERT_EQ(one.equilibria.size(), 1u);
      EXPECT_TRUE(testing::brute_is_equilibrium(p.players(), one.equilibria[0]));
    }
  }
}

TEST(BranchingTest, CutAccounting) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Problem p = testing::corpus_instance(seed);
    BigCount cut_by_f = 0;
    BranchOptions opts;
    opts.on_node = [&](const NodeEvent& ev) {
      ASSERT_FALSE(ev.box.empty());
      ASSERT_TRUE(ev.box.finite());
      if (ev.fixing == nullptr) return;
      const auto kept = box_intersect(ev.box, *ev.fixing);
      cut_by_f += count_points(ev.box) - (kept ? count_points(*kept) : BigCount(0));
    };
    const auto r = solve_all(p, opts);
    EXPECT_EQ(r.stats.points_cut_by_F, cut_by_f) << "seed " << seed;
    EXPECT_LE(r.stats.points_cut_by_F + r.stats.oracle_calls_unique, r.stats.feasible_total);
    EXPECT_LE(r.stats.oracle_calls_unique, r.stats.oracle_calls_total);
  }
}

}  // namespace
}  // namespace discnep
