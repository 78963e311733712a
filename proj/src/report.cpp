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


#include "dcknap/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include "dcknap/error.hpp"
#include "dcknap/io.hpp"

namespace dcknap {

namespace {

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::kInvalidParameter, "expected a non-negative integer, got '" + value + "'");
  }
  return std::stoull(value);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<AveragedSeries> averages(const std::vector<SweepEntry>& entries) {
  std::vector<AveragedSeries> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.result.average);
  return out;
}

std::string prefix(TreeAlgorithm alg, SweepVariable var) {
  return std::string(to_string(alg)) + "_" + to_string(var);
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::vector<std::string> errors;
  bool head_fraction_set = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(line_no) + ": expected key=value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    ExperimentParams& p = config.params;
    try {
      if (key == "n_rooms") {
        p.n_rooms = parse_unsigned(value);
      } else if (key == "dist") {
        p.dist = parse_distribution(value);
      } else if (key == "occupancy") {
        p.occupancy = Rational::parse(value);
      } else if (key == "rate") {
        p.rate = static_cast<std::int64_t>(parse_unsigned(value));
      } else if (key == "tree_alg") {
        p.tree_alg = parse_tree_algorithm(value);
      } else if (key == "sort") {
        p.sort = parse_sort_key(value);
      } else if (key == "head_fraction") {
        p.head_fraction = Rational::parse(value);
        head_fraction_set = true;
      } else if (key == "min_size") {
        p.min_size = parse_unsigned(value);
      } else if (key == "rounding") {
        p.rounding = parse_rounding(value);
      } else if (key == "realizations") {
        p.realizations = parse_unsigned(value);
      } else if (key == "master_seed") {
        p.master_seed = parse_unsigned(value);
      } else if (key == "sweep") {
        config.sweep = parse_sweep_variable(value);
      } else if (key == "domain") {
        config.domain = split_list(value);
      } else if (key == "compare") {
        if (value != "0" && value != "1") throw Error(ErrorKind::kInvalidParameter, "expected 0 or 1");
        config.compare = value == "1";
      } else if (key == "aggregation") {
        config.aggregation = parse_aggregation(value);
      } else if (key == "workers") {
        config.workers = static_cast<unsigned>(parse_unsigned(value));
      } else {
        errors.push_back(key + ": unknown key");
      }
    } catch (const Error& e) {
      errors.push_back(key + ": " + e.what());
    }
  }

  ExperimentParams& p = config.params;
  if (p.tree_alg == TreeAlgorithm::kBalanced) {
    if (head_fraction_set) {
      errors.push_back("head_fraction: not allowed with tree_alg=blT");
    }
    p.head_fraction.reset();
  }
  if (config.sweep == SweepVariable::kHeadFraction) {
    if (p.tree_alg != TreeAlgorithm::kHeadLeft) errors.push_back("sweep: f requires tree_alg=hlT");
    if (config.compare) errors.push_back("compare: not available for a head-fraction sweep");
  }
  if (errors.empty()) {
    try {
      p.validate();
      for (const auto& v : config.domain) with_sweep_value(p, config.sweep, v).validate();
    } catch (const Error& e) {
      errors.push_back(e.what());
    }
  }
  if (!errors.empty()) {
    std::string message = "invalid config:";
    for (const auto& e : errors) message += "\n  " + e;
    throw Error(ErrorKind::kConfig, message);
  }
  return config;
}

ExperimentConfig parse_experiment_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open config '" + path + "'");
  return parse_experiment_config(in);
}

std::string sweep_table_csv(const std::vector<SweepEntry>& entries, Metric metric) {
  std::ostringstream out;
  out << "height";
  for (const auto& e : entries) out << ',' << e.label;
  out << '\n';
  const int height = entries.empty() ? -1 : entries.front().result.average.height();
  for (int h = 0; h <= height; ++h) {
    out << h;
    for (const auto& e : entries) {
      out << ',';
      if (h == 0 && is_stepwise(metric)) continue;
      out << format_fixed(e.result.average.value(metric, h));
    }
    out << '\n';
  }
  return out.str();
}

std::string plot_data_csv(const std::vector<SweepEntry>& entries) {
  std::ostringstream out;
  out << "height,metric,strategy,value\n";
  for (const auto& e : entries) {
    const AveragedSeries& avg = e.result.average;
    for (Metric m : kAllMetrics) {
      for (int h = is_stepwise(m) ? 1 : 0; h <= avg.height(); ++h) {
        out << h << ',' << to_string(m) << ',' << e.label << ',' << format_fixed(avg.value(m, h))
            << '\n';
      }
    }
  }
  return out.str();
}

CriticalHeights critical_heights(const std::vector<SweepEntry>& entries, Aggregation aggregation) {
  const auto avgs = averages(entries);
  CriticalHeights out;
  std::vector<int> heights;
  for (Metric m : kEfficiencyMetrics) {
    const int h = critical_height(avgs, m, aggregation);
    out.per_metric.emplace_back(m, h);
    heights.push_back(h);
  }
  out.mode = critical_height_mode(heights);
  return out;
}

namespace {

void render_sweep(const std::vector<SweepEntry>& entries, const ExperimentConfig& config,
                  TreeAlgorithm alg, const CriticalHeights& critical, ReportFiles& files) {
  const std::string base = prefix(alg, config.sweep);
  for (Metric m : kAllMetrics) files[base + "_" + to_string(m) + ".csv"] = sweep_table_csv(entries, m);
  files[base + "_plot.csv"] = plot_data_csv(entries);

  std::ostringstream ch;
  ch << "metric,critical_height\n";
  for (const auto& [m, h] : critical.per_metric) ch << to_string(m) << ',' << h << '\n';
  ch << "mode," << critical.mode << '\n';
  files[base + "_critical_heights.csv"] = ch.str();

  std::ostringstream runs;
  runs << "value,realizations,resampled,tree_height\n";
  for (const auto& e : entries) {
    runs << e.label << ',' << e.result.average.realizations << ',' << e.result.resampled << ','
         << e.result.average.height() << '\n';
  }
  files[base + "_runs.csv"] = runs.str();
}

}  // namespace

ReportFiles run_report(const ExperimentConfig& config) {
  ReportFiles files;
  const std::vector<std::string> domain =
      config.domain.empty() ? default_domain(config.sweep) : config.domain;

  const TreeAlgorithm primary_alg = config.params.tree_alg;
  const auto primary = sweep(config.params, config.sweep, domain, config.workers);
  const CriticalHeights primary_ch = critical_heights(primary, config.aggregation);
  render_sweep(primary, config, primary_alg, primary_ch, files);

  if (!config.compare) return files;

  ExperimentParams other_params = config.params;
  if (primary_alg == TreeAlgorithm::kHeadLeft) {
    other_params.tree_alg = TreeAlgorithm::kBalanced;
    other_params.head_fraction.reset();
  } else {
    other_params.tree_alg = TreeAlgorithm::kHeadLeft;
    other_params.head_fraction = Rational(1, 2);
  }
  const auto other = sweep(other_params, config.sweep, domain, config.workers);
  const CriticalHeights other_ch = critical_heights(other, config.aggregation);
  render_sweep(other, config, other_params.tree_alg, other_ch, files);

  const auto& hl = primary_alg == TreeAlgorithm::kHeadLeft ? primary : other;
  const auto& bl = primary_alg == TreeAlgorithm::kHeadLeft ? other : primary;
  const int h_tilde = std::min(primary_ch.mode, other_ch.mode);
  const std::array<Metric, 1> gbe_dps = {Metric::kGbeDps};

  std::ostringstream l1;
  l1 << "value,h_tilde,hlT_GbE_DPS,blT_GbE_DPS,hlT_all,blT_all,winner\n";
  auto row = [&](const std::string& label, const std::vector<AveragedSeries>& a,
                 const std::vector<AveragedSeries>& b) {
    const auto single = l1_compare(flatten_efficiencies(a, gbe_dps, h_tilde),
                                   flatten_efficiencies(b, gbe_dps, h_tilde));
    const auto all = l1_compare(flatten_efficiencies(a, kEfficiencyMetrics, h_tilde),
                                flatten_efficiencies(b, kEfficiencyMetrics, h_tilde));
    const char* winner = all.winner == Winner::kFirst    ? "hlT"
                         : all.winner == Winner::kSecond ? "blT"
                                                         : "tie";
    l1 << label << ',' << h_tilde << ',' << format_fixed(single.norm_first) << ','
       << format_fixed(single.norm_second) << ',' << format_fixed(all.norm_first) << ','
       << format_fixed(all.norm_second) << ',' << winner << '\n';
  };
  for (std::size_t i = 0; i < hl.size(); ++i) {
    row(hl[i].label, {hl[i].result.average}, {bl[i].result.average});
  }
  row("all", averages(hl), averages(bl));
  files["l1_" + std::string(to_string(config.sweep)) + ".csv"] = l1.str();
  return files;
}

void write_report(const ReportFiles& files, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create '" + out_dir + "': " + ec.message());
  for (const auto& [name, contents] : files) {
    write_text_file((std::filesystem::path(out_dir) / name).string(), contents);
  }
}

}  // namespace dcknap
