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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "discnep/branching.hpp"
#include "discnep/continuous.hpp"
#include "discnep/generator.hpp"
#include "discnep/jacobi.hpp"
#include "discnep/oracle.hpp"
#include "discnep/shrink.hpp"
#include "support/brute_force.hpp"
#include "support/instances.hpp"

namespace discnep {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kCorpusSize = 200;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(const std::vector<IntPoint>& pts) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) os << ' ';
    os << '(';
    for (std::size_t i = 0; i < pts[k].size(); ++i) os << (i ? "," : "") << pts[k][i];
    os << ')';
  }
  os << '}';
  return os.str();
}

Verdict example_set(const Problem& p, const std::vector<IntPoint>& want) {
  const auto t0 = Clock::now();
  const auto a = solve_all(p).equilibria;
  const auto b = enumerate_equilibria(p, p.bounds());
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "solve_all=" << str(a) << " enumerate=" << str(b) << " in " << dt << "s";
  return {a == want && b == want && dt < 1.0, os.str()};
}

Verdict shrink_reproduction() {
  auto pct = [](const Problem& p) {
    const auto s = shrink_fixed_point(p);
    const BigCount total = count_points(p.bounds());
    return format_percent(total - count_points(s.box()), total);
  };
  const auto s1 = shrink_fixed_point(testing::example1());
  const bool box_ok = s1.box() == IntBox({3, 3}, {6, 6});
  const auto p1 = pct(testing::example1());
  const auto p2 = pct(testing::example2());
  const auto p3 = pct(testing::example3());
  std::ostringstream os;
  os << "ex1 box " << to_string(s1.box()) << " pct_LB " << p1 << ", ex2 " << p2 << ", ex3 "
     << p3;
  return {box_ok && p1 == "84.00" && p2 == "0.00" && p3 == "0.00", os.str()};
}

Verdict example4() {
  const Problem p = testing::example4();
  const auto r = solve_all_improved(p);
  const Partition known{{Group::kG1, Group::kG2, Group::kG2, Group::kG1}};
  const auto j = jacobi_solve(p, known);
  const bool jac_ok = j.equilibrium && testing::brute_is_equilibrium(p.players(), *j.equilibrium) &&
                      j.steps <= 10;
  std::ostringstream os;
  os << "improved found " << r.equilibria.size() << " " << str(r.equilibria) << "; jacobi "
     << (j.equilibrium ? str({*j.equilibrium}) : "none") << " after " << j.steps << " steps";
  return {r.complete && r.equilibria.size() == 2 && jac_ok, os.str()};
}

struct CorpusOutcome {
  std::size_t mismatches = 0;
  std::size_t cut_violations = 0;
  std::size_t shrink_violations = 0;
  std::size_t favorable = 0;
  std::size_t favorable_violations = 0;
  std::size_t nodes_checked = 0;
  std::size_t equilibria = 0;
  std::size_t h_low = 0;
  std::size_t h_high = 0;
  double seconds = 0.0;
};

CorpusOutcome run_corpus() {
  CorpusOutcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const auto spec = testing::corpus_spec(seed);
    (spec.h > 0.05 ? out.h_high : out.h_low) += 1;
    const Problem p = generate(spec);
    const auto brute = testing::brute_equilibria(p.players());
    out.equilibria += brute.size();

    BranchOptions opts;
    opts.on_node = [&](const NodeEvent& ev) {
      if (ev.fixing == nullptr) return;
      ++out.nodes_checked;
      for (const auto& x : brute) {
        if (ev.box.contains(x) && !ev.fixing->contains(x)) ++out.cut_violations;
      }
    };
    const auto r = solve_all(p, opts);
    if (!r.complete || r.equilibria != enumerate_equilibria(p, p.bounds())) ++out.mismatches;

    const auto box = shrink_fixed_point(p).box();
    for (const auto& x : brute) {
      if (!box.contains(x)) ++out.shrink_violations;
    }

    const auto cont = solve_continuous(p, p.bounds());
    const Point rounded = round_near_integers(cont.x.coords);
    if (cont.converged && rounded.integral) {
      ++out.favorable;
      if (!is_equilibrium(p, rounded.to_int()) ||
          !testing::brute_is_equilibrium(p.players(), rounded.to_int())) {
        ++out.favorable_violations;
      }
    }
  }
  out.seconds = seconds_since(t0);
  return out;
}

Verdict jacobi_guarantees() {
  std::size_t failures = 0;
  std::size_t runs = 0;
  std::uint64_t max_steps = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    const Problem p = testing::corpus_instance(seed, true);
    const auto det = detect_partition(p);
    if (!det.partition || !is_valid_partition(p, *det.partition)) {
      ++failures;
      continue;
    }
    for (auto sched : {Schedule::kGaussSeidel, Schedule::kJacobi, Schedule::kGaussSouthwell}) {
      JacobiOptions opts;
      opts.schedule = sched;
      const auto r = jacobi_solve(p, *det.partition, opts);
      ++runs;
      max_steps = std::max(max_steps, r.steps);
      const bool ok = r.equilibrium && r.monotone &&
                      r.steps <= step_bound(p, fairness_window(p, sched)) &&
                      is_equilibrium(p, *r.equilibrium) &&
                      testing::brute_is_equilibrium(p.players(), *r.equilibrium);
      if (!ok) ++failures;
    }
  }
  std::ostringstream os;
  os << runs << " runs on " << kCorpusSize << " 2-groups instances, " << failures
     << " failures, longest run " << max_steps << " steps";
  return {failures == 0, os.str()};
}

struct BigInstance {
  const char* name;
  std::size_t players;
  std::size_t vars;
  double eig_min, eig_max, b_min, b_max;
  std::int64_t lower, upper;
};

Verdict big_instances() {
  const BigInstance table[] = {
      {"C-10-2", 10, 2, 0.15, 2.54, -10, 10, -5, 5},
      {"C-8-10", 8, 10, 0.01, 2309.75, -0.1, 0.1, -3, 3},
      {"C-20-5", 20, 5, 0.10, 362.08, -10, 10, -10, 10},
      {"C-200-5", 200, 5, 0.06, 207.03, -1000, 1000, -6, 0},
  };
  bool pass = true;
  std::ostringstream os;
  for (const auto& b : table) {
    GeneratorSpec spec;
    spec.players = b.players;
    spec.vars_per_player = b.vars;
    spec.eig_min = b.eig_min;
    spec.eig_max = b.eig_max;
    spec.b_min = b.b_min;
    spec.b_max = b.b_max;
    spec.lower = b.lower;
    spec.upper = b.upper;
    spec.h = 0.1;
    spec.seed = 2024;
    spec.two_groups = true;
    const auto t0 = Clock::now();
    const Problem p = generate(spec);
    const auto det = detect_partition(p);
    JacobiOptions opts;
    opts.record_trace = false;
    std::optional<JacobiResult> r;
    if (det.partition) r = jacobi_solve(p, *det.partition, opts);
    const bool ok = r && r->equilibrium && r->monotone && is_equilibrium(p, *r->equilibrium);
    pass = pass && ok;
    os << b.name << (ok ? " ok" : " FAILED");
    if (r) os << " (" << r->sweeps << " sweeps";
    os << ", " << seconds_since(t0) << "s" << (r ? ")" : "") << "; ";
  }
  os << "#feas C-200-5 = 7^1000 (" << count_points(IntBox(std::vector<std::int64_t>(1000, -6),
                                                          std::vector<std::int64_t>(1000, 0)))
                                          .str()
                                          .size()
     << " digits)";
  return {pass, os.str()};
}

}  // namespace
}  // namespace discnep

int main() {
  using namespace discnep;
  int failed = 0;
  auto report = [&](int id, const char* title, const Verdict& v) {
    std::printf("[%s] criterion %d: %s -- %s\n", v.pass ? "PASS" : "FAIL", id, title,
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  };

  report(1, "Example 1 equilibrium set",
         example_set(testing::example1(), {{3, 6}, {4, 5}, {5, 4}, {6, 3}}));
  report(2, "Example 2 has no equilibrium", example_set(testing::example2(), {}));
  report(3, "Example 3 equilibrium set",
         example_set(testing::example3(), {{-1, -1}, {1, 1}, {2, 2}}));
  report(4, "shrink reproduction", shrink_reproduction());
  report(5, "Example 4 improved search and Jacobi", example4());

  const CorpusOutcome c = run_corpus();
  {
    std::ostringstream os;
    os << c.mismatches << " mismatches on " << kCorpusSize << " instances (h=0.01: " << c.h_low
       << ", h=0.1: " << c.h_high << "), " << c.equilibria << " equilibria in total, "
       << c.seconds << "s";
    report(6, "branching equals enumeration", {c.mismatches == 0, os.str()});
  }
  {
    std::ostringstream os;
    os << c.cut_violations << " fixing-box violations over " << c.nodes_checked << " nodes, "
       << c.shrink_violations << " shrink violations";
    report(7, "pruning soundness", {c.cut_violations == 0 && c.shrink_violations == 0, os.str()});
  }
  report(8, "Jacobi guarantees on 2-groups games", jacobi_guarantees());
  {
    std::ostringstream os;
    os << c.favorable << " integral continuous solutions, " << c.favorable_violations
       << " not equilibria";
    report(9, "favorable solutions", {c.favorable_violations == 0, os.str()});
  }
  report(10, "large 2-groups games via Jacobi", big_instances());
  return failed;
}
