// Copyright 2026 The dcknap Authors
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


// dcknap: generate room instances, solve them, inspect D&C trees and run
// Monte Carlo experiment grids.
//
// Exit codes: 0 success, 1 infeasible instance or split, 2 usage or config
// error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dcknap/dctree.hpp"
#include "dcknap/error.hpp"
#include "dcknap/io.hpp"
#include "dcknap/metrics.hpp"
#include "dcknap/montecarlo.hpp"
#include "dcknap/random.hpp"
#include "dcknap/report.hpp"
#include "dcknap/solvers.hpp"

namespace {

using namespace dcknap;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInfeasible:
    case ErrorKind::kSplitInfeasible: return kExitInfeasible;
    case ErrorKind::kIo: return kExitIo;
    default: return kExitUsage;
  }
}

std::string join_rooms(const ProblemInstance& instance, const Selection& selection) {
  std::string out;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (!selection[i]) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(instance.room_ids()[i]);
  }
  return out.empty() ? "-" : out;
}

struct GenerateOptions {
  std::size_t n = 512;
  std::string dist = "uniform";
  std::string occupancy = "0.9";
  std::size_t count = 1;
  std::uint64_t seed = 2020;
  std::string out;
};

int cmd_generate(const GenerateOptions& opt) {
  const Distribution dist = parse_distribution(opt.dist);
  const Rational occupancy = Rational::parse(opt.occupancy);
  std::vector<Realization> batch;
  batch.reserve(opt.count);
  for (std::size_t j = 0; j < opt.count; ++j) {
    batch.push_back(make_realization(dist, opt.n, occupancy, derive_seed(opt.seed, j)));
  }
  std::ostringstream csv;
  write_instance_csv(csv, batch_from_realizations(batch));
  if (opt.out == "-") {
    std::cout << csv.str();
  } else {
    write_text_file(opt.out, csv.str());
  }
  return kExitOk;
}

struct InstanceOptions {
  std::string file;
  std::string column = "1";
  std::int64_t rate = 54;
};

ProblemInstance load_instance(const InstanceOptions& opt) {
  const InstanceBatch batch = read_instance_csv_file(opt.file);
  return batch.instance(batch.column_index(opt.column), opt.rate);
}

int cmd_solve(const InstanceOptions& in, const std::string& solver) {
  if (solver != "greedy" && solver != "dp" && solver != "lp" && solver != "all") {
    throw Error(ErrorKind::kInvalidParameter, "unknown solver '" + solver + "'");
  }
  const ProblemInstance instance = load_instance(in);
  instance.require_feasible("solve");
  std::cout << "rooms " << instance.size() << '\n'
            << "demand " << instance.demand() << '\n'
            << "capacity " << instance.total_capacity() << '\n';
  if (solver == "lp" || solver == "all") {
    const LpRelaxation lp = lp_relax_solve(instance);
    std::cout << "LRS " << lp.value.to_fixed(2) << ' ' << lp.value << '\n';
    const auto room = lp.fractional_room(instance);
    std::cout << "LRS_fractional_room " << (room ? std::to_string(*room) : "-") << '\n';
  }
  if (solver == "dp" || solver == "all") {
    const SolveResult dp = dp_solve(instance);
    std::cout << "DPS " << dp.value << '\n'
              << "DPS_rooms " << join_rooms(instance, dp.selection) << '\n';
  }
  if (solver == "greedy" || solver == "all") {
    const SolveResult greedy = greedy_solve(instance);
    std::cout << "GAS " << greedy.value << '\n'
              << "GAS_rooms " << join_rooms(instance, greedy.selection) << '\n';
  }
  return kExitOk;
}

struct TreeOptions {
  std::string tree = "hlT";
  std::string sort = "gamma";
  std::optional<std::string> fraction;
  std::size_t min_size = 4;
  std::string rounding = "ceil";
  std::uint64_t seed = 0;
  std::string dot;
  bool efficiency = false;
};

int cmd_tree(const InstanceOptions& in, const TreeOptions& opt) {
  TreeParams params;
  params.algorithm = parse_tree_algorithm(opt.tree);
  params.sort = SortCriterion{parse_sort_key(opt.sort), true, opt.seed};
  params.min_size = opt.min_size;
  params.rounding = parse_rounding(opt.rounding);
  if (opt.fraction) {
    if (params.algorithm == TreeAlgorithm::kBalanced) {
      throw Error(ErrorKind::kInvalidParameter, "--fraction does not apply to blT");
    }
    params.head_fraction = Rational::parse(*opt.fraction);
  }
  const ProblemInstance instance = load_instance(in);
  instance.require_feasible("tree");
  const DCTree tree = build_tree(instance, params);
  std::cout << membership_table_csv(tree);
  if (opt.efficiency) std::cout << '\n' << efficiency_table_csv(solve_tree(tree));
  if (!opt.dot.empty()) write_text_file(opt.dot, to_dot(tree));
  return kExitOk;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir,
                   std::optional<unsigned> workers) {
  ExperimentConfig config = parse_experiment_config_file(config_path);
  if (workers) config.workers = *workers;
  const ReportFiles files = run_report(config);
  write_report(files, out_dir);
  for (const auto& [name, contents] : files) std::cout << out_dir << '/' << name << '\n';
  return kExitOk;
}

void add_instance_options(CLI::App* cmd, InstanceOptions& opt) {
  cmd->add_option("file", opt.file, "Instance CSV")->required();
  cmd->add_option("--column", opt.column, "Column label or 1-based index")->capture_default_str();
  cmd->add_option("--rate", opt.rate, "Students per proctor")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide & Conquer proctor assignment solver"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write random room capacities as instance CSV");
  generate->add_option("--n", gen.n, "Rooms per realization")->capture_default_str();
  generate->add_option("--dist", gen.dist, "uniform | poisson | binomial")->capture_default_str();
  generate->add_option("--occupancy", gen.occupancy, "Demand fraction of total capacity")
      ->capture_default_str();
  generate->add_option("--count", gen.count, "Number of realizations")->capture_default_str();
  generate->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output path, '-' for stdout")->required();

  InstanceOptions solve_in;
  std::string solver = "all";
  auto* solve = app.add_subcommand("solve", "Solve one instance column");
  add_instance_options(solve, solve_in);
  solve->add_option("--solver", solver, "greedy | dp | lp | all")->capture_default_str();

  InstanceOptions tree_in;
  TreeOptions tree_opt;
  auto* tree = app.add_subcommand("tree", "Build a D&C tree and print vertex membership");
  add_instance_options(tree, tree_in);
  tree->add_option("--tree", tree_opt.tree, "hlT | blT")->capture_default_str();
  tree->add_option("--sort", tree_opt.sort, "p | c | gamma | random")->capture_default_str();
  tree->add_option("--fraction", tree_opt.fraction, "Head fraction f for hlT (default 0.5)");
  tree->add_option("--min-size", tree_opt.min_size, "Leaf size threshold m")->capture_default_str();
  tree->add_option("--rounding", tree_opt.rounding, "ceil | floor")->capture_default_str();
  tree->add_option("--seed", tree_opt.seed, "Shuffle seed for random sort")->capture_default_str();
  tree->add_option("--dot", tree_opt.dot, "Also write the tree as Graphviz DOT");
  tree->add_flag("--efficiency", tree_opt.efficiency, "Append the per-height efficiency table");

  std::string config_path;
  std::string out_dir;
  std::optional<unsigned> workers;
  auto* experiment = app.add_subcommand("experiment", "Run a sweep described by a config file");
  experiment->add_option("config", config_path, "key=value config file")->required();
  experiment->add_option("--out", out_dir, "Output directory")->required();
  experiment->add_option("--workers", workers, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*solve) return cmd_solve(solve_in, solver);
    if (*tree) return cmd_tree(tree_in, tree_opt);
    if (*experiment) return cmd_experiment(config_path, out_dir, workers);
  } catch (const InfeasibleError& e) {
    std::cerr << "dcknap: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    std::cerr << "dcknap: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "dcknap: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
