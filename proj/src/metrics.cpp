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


#include "dcknap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dcknap/error.hpp"

namespace dcknap {

namespace {

constexpr std::array<const char*, kMetricCount> kMetricNames = {
    "LRS",     "DPS",     "GAS",     "GbE_LRS", "GbE_DPS", "GbE_GAS",
    "SwE_LRS", "SwE_DPS", "SwE_GAS", "GAE",     "LRE",
};

}  // namespace

const char* to_string(Metric metric) { return kMetricNames[static_cast<std::size_t>(metric)]; }

Metric parse_metric(std::string_view text) {
  for (Metric m : kAllMetrics) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown metric '" + std::string(text) + "'");
}

bool is_stepwise(Metric metric) {
  return metric == Metric::kSweLrs || metric == Metric::kSweDps || metric == Metric::kSweGas;
}

Rational HeightEfficiencies::get(Metric metric) const {
  switch (metric) {
    case Metric::kLrs: return lrs;
    case Metric::kDps: return Rational(dps);
    case Metric::kGas: return Rational(gas);
    case Metric::kGbeLrs: return gbe_lrs;
    case Metric::kGbeDps: return gbe_dps;
    case Metric::kGbeGas: return gbe_gas;
    case Metric::kSweLrs: return swe_lrs;
    case Metric::kSweDps: return swe_dps;
    case Metric::kSweGas: return swe_gas;
    case Metric::kGae: return gae;
    case Metric::kLre: return lre;
  }
  return Rational(0);
}

std::vector<double> AveragedSeries::column(Metric metric) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[static_cast<std::size_t>(metric)]);
  return out;
}

Rational percent_change(const Rational& value, const Rational& base) {
  if (base.is_zero()) return Rational(0);
  return Rational(100) * (value - base) / base;
}

std::vector<SolutionTriple> solve_nodes(const DCTree& tree) {
  std::vector<SolutionTriple> triples;
  triples.reserve(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    try {
      triples.push_back(solve_triple(tree.node_instance(i)));
    } catch (const InfeasibleError& e) {
      throw InfeasibleError(e.deficit(), "vertex " + std::to_string(i));
    }
  }
  return triples;
}

EfficiencySeries efficiency_series(const DCTree& tree, std::span<const SolutionTriple> triples) {
  if (triples.size() != tree.size()) {
    throw Error(ErrorKind::kInvalidInput, "one solution triple per vertex required");
  }
  EfficiencySeries series;
  for (int h = 0; h <= tree.height(); ++h) {
    HeightEfficiencies row;
    for (std::size_t leaf : prune(tree, h)) {
      row.lrs += triples[leaf].lrs;
      row.dps += triples[leaf].dps;
      row.gas += triples[leaf].gas;
    }
    const Rational dps(row.dps);
    const Rational gas(row.gas);
    row.gae = percent_change(gas, dps);
    row.lre = dps.is_zero() ? Rational(0) : Rational(100) * (dps - row.lrs) / dps;
    if (h > 0) {
      const HeightEfficiencies& root = series.rows.front();
      const HeightEfficiencies& prev = series.rows.back();
      row.gbe_lrs = percent_change(row.lrs, root.lrs);
      row.gbe_dps = percent_change(dps, Rational(root.dps));
      row.gbe_gas = percent_change(gas, Rational(root.gas));
      row.swe_lrs = percent_change(row.lrs, prev.lrs);
      row.swe_dps = percent_change(dps, Rational(prev.dps));
      row.swe_gas = percent_change(gas, Rational(prev.gas));
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

EfficiencySeries solve_tree(const DCTree& tree) {
  const auto triples = solve_nodes(tree);
  return efficiency_series(tree, triples);
}

AveragedSeries average_series(std::span<const EfficiencySeries> series) {
  if (series.empty()) throw Error(ErrorKind::kInvalidInput, "cannot average an empty batch");
  const std::size_t rows = series.front().rows.size();
  AveragedSeries out;
  out.realizations = series.size();
  out.rows.assign(rows, {});
  for (const EfficiencySeries& s : series) {
    if (s.rows.size() != rows) {
      throw Error(ErrorKind::kInvalidInput,
                  "cannot average series of heights " + std::to_string(rows - 1) + " and " +
                      std::to_string(s.height()));
    }
    for (std::size_t h = 0; h < rows; ++h) {
      for (Metric m : kAllMetrics) {
        out.rows[h][static_cast<std::size_t>(m)] += s.rows[h].get(m).to_double();
      }
    }
  }
  const auto k = static_cast<double>(series.size());
  for (auto& row : out.rows) {
    for (double& v : row) v /= k;
  }
  return out;
}

Aggregation parse_aggregation(std::string_view text) {
  if (text == "mean") return Aggregation::kMean;
  if (text == "max") return Aggregation::kMax;
  throw Error(ErrorKind::kInvalidParameter, "unknown aggregation '" + std::string(text) + "'");
}

int critical_height(std::span<const std::vector<double>> columns, Aggregation aggregation) {
  if (columns.empty()) throw Error(ErrorKind::kInvalidInput, "critical height needs a non-empty domain");
  const std::size_t rows = columns.front().size();
  if (rows == 0) throw Error(ErrorKind::kInvalidInput, "critical height needs at least one height");
  for (const auto& col : columns) {
    if (col.size() != rows) {
      throw Error(ErrorKind::kInvalidInput, "all strategy columns must share the tree height");
    }
  }
  const int height = static_cast<int>(rows) - 1;
  auto slope = [&](int h) {
    double acc = aggregation == Aggregation::kMean ? 0.0 : -INFINITY;
    for (const auto& col : columns) {
      const double d = col[static_cast<std::size_t>(h)] - col[static_cast<std::size_t>(h - 1)];
      acc = aggregation == Aggregation::kMean ? acc + d : std::max(acc, d);
    }
    return aggregation == Aggregation::kMean ? acc / static_cast<double>(columns.size()) : acc;
  };
  for (int h = 2; h <= height; ++h) {
    if (slope(h) > 2.0 * slope(h - 1)) return h;
  }
  return height;
}

int critical_height(std::span<const AveragedSeries> per_value, Metric metric,
                    Aggregation aggregation) {
  std::vector<std::vector<double>> columns;
  columns.reserve(per_value.size());
  for (const AveragedSeries& s : per_value) columns.push_back(s.column(metric));
  return critical_height(columns, aggregation);
}

int critical_height_mode(std::span<const int> heights) {
  if (heights.empty()) throw Error(ErrorKind::kInvalidInput, "mode of an empty list");
  std::map<int, int> counts;
  for (int h : heights) ++counts[h];
  int best = counts.begin()->first;
  int best_count = 0;
  for (const auto& [h, count] : counts) {
    if (count > best_count) {  // ascending keys: ties keep the smaller height
      best = h;
      best_count = count;
    }
  }
  return best;
}

L1Comparison l1_compare(std::span<const double> first, std::span<const double> second) {
  if (first.size() != second.size()) {
    throw Error(ErrorKind::kInvalidInput, "l1 comparison needs arrays of equal shape");
  }
  L1Comparison out;
  for (double v : first) out.norm_first += std::fabs(v);
  for (double v : second) out.norm_second += std::fabs(v);
  if (out.norm_first < out.norm_second) {
    out.winner = Winner::kFirst;
  } else if (out.norm_second < out.norm_first) {
    out.winner = Winner::kSecond;
  } else {
    out.winner = Winner::kTie;
  }
  return out;
}

std::vector<double> flatten_efficiencies(std::span<const AveragedSeries> per_value,
                                         std::span<const Metric> metrics, int h_tilde) {
  std::vector<double> out;
  for (const AveragedSeries& s : per_value) {
    if (h_tilde > s.height()) {
      throw Error(ErrorKind::kInvalidInput, "comparison height " + std::to_string(h_tilde) +
                                                " exceeds series height " + std::to_string(s.height()));
    }
    for (Metric m : metrics) {
      for (int h = 1; h <= h_tilde; ++h) out.push_back(s.value(m, h));
    }
  }
  return out;
}

}  // namespace dcknap
