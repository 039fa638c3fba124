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

#include "discnep/generator.hpp"
#include "discnep/instance_io.hpp"
#include "discnep/jacobi.hpp"

namespace discnep {
namespace {

GeneratorSpec base_spec() {
  GeneratorSpec s;
  s.players = 3;
  s.vars_per_player = 2;
  s.h = 0.1;
  s.eig_min = 2.0;
  s.eig_max = 30.0;
  s.b_min = -4.0;
  s.b_max = 6.0;
  s.lower = -3;
  s.upper = 4;
  s.seed = 42;
  return s;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(s).eigenvalues();
}

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(dump_problem(generate(base_spec())), dump_problem(generate(base_spec())));
  auto other = base_spec();
  other.seed = 43;
  EXPECT_NE(dump_problem(generate(base_spec())), dump_problem(generate(other)));
}

TEST(GeneratorTest, ZeroAsymmetryIsSymmetric) {
  auto s = base_spec();
  s.h = 0.0;
  const Problem p = generate(s);
  EXPECT_EQ(p.matrix().M, p.matrix().M.transpose());
}

TEST(GeneratorTest, SpectrumOfSymmetricPart) {
  for (bool two : {false, true}) {
    for (double h : {0.0, 0.01, 0.1, 1.0}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = base_spec();
        s.h = h;
        s.seed = seed;
        s.two_groups = two;
        const auto ev = symmetric_eigenvalues(generate(s).matrix().M);
        EXPECT_NEAR(ev[0], s.eig_min, 1e-9 * s.eig_max);
        EXPECT_NEAR(ev[ev.size() - 1], s.eig_max, 1e-9 * s.eig_max);
        EXPECT_GT(ev[0], 0.0);
      }
    }
  }
}

TEST(GeneratorTest, PerturbationOnlyOnCrossPlayerBlocks) {
  const Problem p = generate(base_spec());
  const Eigen::MatrixXd skew = p.matrix().M - p.matrix().M.transpose();
  bool any = false;
  for (Eigen::Index i = 0; i < skew.rows(); ++i) {
    for (Eigen::Index j = 0; j < skew.cols(); ++j) {
      if (p.owner(static_cast<std::size_t>(i)) == p.owner(static_cast<std::size_t>(j))) {
        EXPECT_EQ(skew(i, j), 0.0);
      } else if (skew(i, j) != 0.0) {
        any = true;
      }
    }
  }
  EXPECT_TRUE(any);
}

TEST(GeneratorTest, RangesRespected) {
  const auto s = base_spec();
  const Problem p = generate(s);
  EXPECT_EQ(p.num_players(), 3u);
  EXPECT_EQ(p.dim(), 6u);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    EXPECT_EQ(p.lower()[i], -3);
    EXPECT_EQ(p.upper()[i], 4);
    const double b = p.matrix().bhat[static_cast<Eigen::Index>(i)];
    EXPECT_GE(b, s.b_min);
    EXPECT_LE(b, s.b_max);
  }
}

TEST(GeneratorTest, FeasibleCount) {
  GeneratorSpec s;
  s.players = 2;
  s.vars_per_player = 1;
  s.lower = -500;
  s.upper = 500;
  EXPECT_EQ(count_points(generate(s).bounds()), BigCount(1002001));
}

TEST(GeneratorTest, RejectsInvalidRanges) {
  auto bad = [](auto mutate) {
    auto s = base_spec();
    mutate(s);
    return s;
  };
  EXPECT_THROW(generate(bad([](auto& s) { s.h = -0.1; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.eig_min = 0.0; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.eig_max = 1.0; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.lower = 5; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.b_min = 7.0; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.players = 0; })), std::invalid_argument);
  EXPECT_THROW(generate(bad([](auto& s) { s.vars_per_player = 0; })), std::invalid_argument);
}

TEST(GeneratorTest, TwoGroupsArePartitionable) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = base_spec();
    s.two_groups = true;
    s.seed = seed;
    const Problem p = generate(s);
    const auto det = detect_partition(p);
    ASSERT_TRUE(det.partition);
    EXPECT_TRUE(is_valid_partition(p, *det.partition));
  }
}

TEST(GeneratorTest, SingleVariableGame) {
  GeneratorSpec s;
  s.players = 1;
  s.vars_per_player = 1;
  s.two_groups = true;
  EXPECT_EQ(generate(s).dim(), 1u);
}

}  // namespace
}  // namespace discnep
