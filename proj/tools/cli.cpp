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


#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "discnep/branching.hpp"
#include "discnep/generator.hpp"
#include "discnep/instance_io.hpp"
#include "discnep/jacobi.hpp"
#include "discnep/oracle.hpp"
#include "discnep/shrink.hpp"

namespace discnep::cli {
namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("malformed " + what + ": '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    auto item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(parse_number<T>(item, what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
std::pair<T, T> parse_range(const std::string& text, const std::string& what) {
  const auto v = parse_list<T>(text, what);
  if (v.size() != 2) throw UsageError(what + " must be two values 'A,B'");
  return {v[0], v[1]};
}

Problem load(const std::string& path) {
  try {
    return load_problem_file(path);
  } catch (const ModelError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

ordered_json points_json(const std::vector<IntPoint>& points) {
  auto arr = ordered_json::array();
  for (const auto& p : points) arr.push_back(p);
  return arr;
}

ordered_json optional_count(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json stats_json(const SearchStats& s) {
  const BigCount& total = s.feasible_total;
  auto pct_of = [&](const std::optional<std::uint64_t>& v) {
    return v ? ordered_json(format_percent(BigCount(*v), total)) : ordered_json(nullptr);
  };
  ordered_json j;
  j["eq_count"] = s.eq_count;
  j["oracle_calls_total"] = s.oracle_calls_total;
  j["oracle_calls_unique"] = s.oracle_calls_unique;
  j["oracle_calls_at_first"] = optional_count(s.oracle_calls_at_first);
  j["oracle_calls_at_last"] = optional_count(s.oracle_calls_at_last);
  j["nodes_processed"] = s.nodes_processed;
  j["points_cut_by_shrink"] = s.points_cut_by_shrink.str();
  j["points_cut_by_F"] = s.points_cut_by_F.str();
  j["feasible_total"] = total.str();
  j["continuous_solves"] = s.continuous_solves;
  j["continuous_failures"] = s.continuous_failures;
  j["fallback_enumerations"] = s.fallback_enumerations;
  j["pct_1st"] = pct_of(s.oracle_calls_at_first);
  j["pct_last"] = pct_of(s.oracle_calls_at_last);
  j["pct_tot"] = format_percent(BigCount(s.oracle_calls_unique), total);
  j["pct_LB"] = format_percent(s.points_cut_by_shrink, total);
  j["pct_F"] = format_percent(s.points_cut_by_F, total);
  return j;
}

void emit(const ordered_json& doc, const std::string& path, std::ostream& out) {
  const auto text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

struct SolveArgs {
  std::string file;
  bool improved = false;
  bool fifo = false;
  bool lifo = false;
  double tol = ContinuousOptions{}.tol;
  double round_eps = kDefaultRoundEps;
  std::uint64_t max_nodes = 0;
  std::string out;
};

void add_solve_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("FILE", a.file, "Instance file")->required();
  cmd->add_flag("--improved", a.improved, "Seed the search with shrunk bounds");
  auto* fifo = cmd->add_flag("--fifo", a.fifo, "First-in first-out node list (default)");
  auto* lifo = cmd->add_flag("--lifo", a.lifo, "Last-in first-out node list");
  fifo->excludes(lifo);
  cmd->add_option("--tol", a.tol, "Continuous solver tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--round-eps", a.round_eps, "Integrality tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-nodes", a.max_nodes, "Node limit, 0 for none");
  cmd->add_option("--out", a.out, "Write the result here instead of stdout");
}

int do_solve(const SolveArgs& a, bool one, std::ostream& out) {
  const Problem problem = load(a.file);
  BranchOptions opts;
  opts.discipline = a.lifo ? ListDiscipline::kLifo : ListDiscipline::kFifo;
  opts.continuous.tol = a.tol;
  opts.round_eps = a.round_eps;
  opts.max_nodes = a.max_nodes;
  const SolveResult r = one ? solve_one(problem, opts, a.improved)
                            : a.improved ? solve_all_improved(problem, opts)
                                         : solve_all(problem, opts);
  ordered_json doc;
  doc["equilibria"] = points_json(r.equilibria);
  doc["complete"] = r.complete;
  doc["stats"] = stats_json(r.stats);
  if (r.shrink) {
    doc["shrink"] = {{"lower", r.shrink->lower}, {"upper", r.shrink->upper}};
  }
  emit(doc, a.out, out);
  const bool found = one && !r.equilibria.empty();
  return r.complete || found ? kExitOk : kExitSolver;
}

struct JacobiArgs {
  std::string file;
  std::string schedule = "gauss-seidel";
  std::string partition = "auto";
  std::optional<std::uint64_t> max_steps;
};

ordered_json partition_json(const Partition& p) {
  return {{"G1", p.members(Group::kG1)}, {"G2", p.members(Group::kG2)}};
}

int do_jacobi(const JacobiArgs& a, std::ostream& out, std::ostream& err) {
  const Problem problem = load(a.file);
  JacobiOptions opts;
  opts.schedule = *parse_schedule(a.schedule);
  opts.max_steps = a.max_steps;
  opts.record_trace = false;

  Partition partition;
  if (a.partition == "auto") {
    auto det = detect_partition(problem);
    if (det.partition) {
      partition = std::move(*det.partition);
    } else {
      err << "warning: no valid partition (conflict at " << det.conflict->first << ","
          << det.conflict->second << "); using first-row partition\n";
      partition = first_row_partition(problem);
    }
  } else {
    partition = first_row_partition(problem);
  }
  const bool valid = is_valid_partition(problem, partition);
  const auto h = fairness_window(problem, opts.schedule);
  const JacobiResult r = jacobi_solve(problem, partition, opts);

  ordered_json doc;
  doc["equilibria"] = r.equilibrium ? points_json({*r.equilibrium}) : ordered_json::array();
  doc["converged"] = r.equilibrium.has_value();
  doc["schedule"] = to_string(opts.schedule);
  doc["partition"] = partition_json(partition);
  doc["partition_valid"] = valid;
  doc["steps"] = r.steps;
  doc["sweeps"] = r.sweeps;
  doc["step_bound"] = step_bound(problem, h);
  doc["best_response_calls"] = r.best_response_calls;
  doc["monotone"] = r.monotone;
  emit(doc, "", out);
  return r.equilibrium ? kExitOk : kExitSolver;
}

int do_shrink(const std::string& file, std::ostream& out) {
  const Problem problem = load(file);
  const ShrinkResult s = shrink_fixed_point(problem);
  const BigCount total = count_points(problem.bounds());
  ordered_json doc;
  doc["lower"] = s.lower;
  doc["upper"] = s.upper;
  doc["rounds"] = s.rounds;
  doc["pct_LB"] = format_percent(total - count_points(s.box()), total);
  emit(doc, "", out);
  return kExitOk;
}

int do_enumerate(const std::string& file, std::uint64_t budget, std::ostream& out) {
  const Problem problem = load(file);
  OracleOptions opts;
  opts.budget = budget;
  const auto eqs = enumerate_equilibria(problem, problem.bounds(), opts);
  ordered_json doc;
  doc["equilibria"] = points_json(eqs);
  emit(doc, "", out);
  return kExitOk;
}

int do_check(const std::string& file, const std::string& point, std::ostream& out) {
  const Problem problem = load(file);
  const auto x = parse_list<std::int64_t>(point, "point");
  if (x.size() != problem.dim()) {
    throw UsageError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                     std::to_string(problem.dim()));
  }
  out << "equilibrium: " << (is_equilibrium(problem, x) ? "true" : "false") << "\n";
  return kExitOk;
}

struct GenArgs {
  GeneratorSpec spec;
  std::string b_range = "-10,10";
  std::string bounds = "-5,5";
  std::string eig = "1,10";
  std::string out;
};

int do_gen(GenArgs a, std::ostream& out) {
  std::tie(a.spec.b_min, a.spec.b_max) = parse_range<double>(a.b_range, "--b-range");
  std::tie(a.spec.lower, a.spec.upper) = parse_range<std::int64_t>(a.bounds, "--bounds");
  std::tie(a.spec.eig_min, a.spec.eig_max) = parse_range<double>(a.eig, "--eig");
  try {
    validate(a.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto text = dump_problem(generate(a.spec));
  if (a.out.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out);
    if (!file || !(file << text)) throw UsageError("cannot write " + a.out);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of discrete Nash games with quadratic objectives", "discnep"};
  app.require_subcommand(1);

  SolveArgs solve_all_args;
  SolveArgs solve_one_args;
  auto* solve_all_cmd = app.add_subcommand("solve-all", "Compute every equilibrium");
  add_solve_flags(solve_all_cmd, solve_all_args);
  auto* solve_one_cmd = app.add_subcommand("solve-one", "Stop at the first equilibrium");
  add_solve_flags(solve_one_cmd, solve_one_args);

  JacobiArgs jacobi_args;
  auto* jacobi_cmd = app.add_subcommand("jacobi", "Monotone best-response iteration");
  jacobi_cmd->add_option("FILE", jacobi_args.file, "Instance file")->required();
  jacobi_cmd->add_option("--schedule", jacobi_args.schedule, "Update schedule")
      ->check(CLI::IsMember({"gauss-seidel", "jacobi", "gauss-southwell"}));
  jacobi_cmd->add_option("--partition", jacobi_args.partition, "Variable grouping")
      ->check(CLI::IsMember({"auto", "first-row"}));
  jacobi_cmd->add_option("--max-steps", jacobi_args.max_steps, "Step limit");

  std::string shrink_file;
  auto* shrink_cmd = app.add_subcommand("shrink", "Bounds valid for every equilibrium");
  shrink_cmd->add_option("FILE", shrink_file, "Instance file")->required();

  std::string enum_file;
  std::uint64_t budget = OracleOptions{}.budget;
  auto* enum_cmd = app.add_subcommand("enumerate", "Brute-force equilibrium search");
  enum_cmd->add_option("FILE", enum_file, "Instance file")->required();
  enum_cmd->add_option("--budget", budget, "Maximum number of points to test");

  std::string check_file;
  std::string point;
  auto* check_cmd = app.add_subcommand("check", "Test one profile");
  check_cmd->add_option("FILE", check_file, "Instance file")->required();
  check_cmd->add_option("--point", point, "Comma-separated integers")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->set_help_flag("--help", "Print this help message and exit");
  gen_cmd->add_option("--players", gen.spec.players, "Number of players")->required();
  gen_cmd->add_option("--vars", gen.spec.vars_per_player, "Variables per player")->required();
  gen_cmd->add_option("--h", gen.spec.h, "Asymmetry level");
  gen_cmd->add_option("--b-range", gen.b_range, "Range of b entries 'A,B'");
  gen_cmd->add_option("--bounds", gen.bounds, "Box bounds 'A,B'");
  gen_cmd->add_option("--eig", gen.eig, "Eigenvalue range 'A,B'");
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed");
  gen_cmd->add_flag("--two-groups", gen.spec.two_groups, "Emit a 2-groups partitionable game");
  gen_cmd->add_option("--out", gen.out, "Output file, stdout if omitted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_all_cmd) return do_solve(solve_all_args, false, out);
    if (*solve_one_cmd) return do_solve(solve_one_args, true, out);
    if (*jacobi_cmd) return do_jacobi(jacobi_args, out, err);
    if (*shrink_cmd) return do_shrink(shrink_file, out);
    if (*enum_cmd) return do_enumerate(enum_file, budget, out);
    if (*check_cmd) return do_check(check_file, point, out);
    if (*gen_cmd) return do_gen(gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitUsage;
}

}  // namespace discnep::cli
