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


#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dcknap/metrics.hpp"
#include "dcknap/montecarlo.hpp"

namespace dcknap {

/// Parsed experiment config file.
///
/// Flat `key=value` lines; `#` starts a comment. Parameter keys are the
/// ExperimentParams field names (n_rooms, dist, occupancy, rate, tree_alg,
/// sort, head_fraction, min_size, rounding, realizations, master_seed). Run
/// controls: sweep (o|r|s|f), domain (comma list), compare (0|1: also run
/// the other tree algorithm and emit l1 tables), aggregation (mean|max),
/// workers.
struct ExperimentConfig {
  ExperimentParams params;
  SweepVariable sweep = SweepVariable::kRate;
  std::vector<std::string> domain;  ///< empty = default domain
  bool compare = false;
  Aggregation aggregation = Aggregation::kMean;
  unsigned workers = 1;
};

/// Throws Error(kConfig) listing every unknown or malformed key.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig parse_experiment_config_file(const std::string& path);

/// Output file name -> contents. Pure function of the config.
using ReportFiles = std::map<std::string, std::string>;

/// Height x strategy-value table of one metric, 2 decimals.
std::string sweep_table_csv(const std::vector<SweepEntry>& entries, Metric metric);

/// Long format: height,metric,strategy,value.
std::string plot_data_csv(const std::vector<SweepEntry>& entries);

struct CriticalHeights {
  std::vector<std::pair<Metric, int>> per_metric;
  int mode = 0;
};

CriticalHeights critical_heights(const std::vector<SweepEntry>& entries, Aggregation aggregation);

/// Runs the configured sweep(s) and renders every table.
ReportFiles run_report(const ExperimentConfig& config);

/// Writes each file under `out_dir` (created if missing).
void write_report(const ReportFiles& files, const std::string& out_dir);

}  // namespace dcknap
