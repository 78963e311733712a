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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dcknap/dctree.hpp"
#include "dcknap/rational.hpp"
#include "dcknap/solvers.hpp"

namespace dcknap {

enum class Metric {
  kLrs,
  kDps,
  kGas,
  kGbeLrs,
  kGbeDps,
  kGbeGas,
  kSweLrs,
  kSweDps,
  kSweGas,
  kGae,
  kLre,
};

inline constexpr std::size_t kMetricCount = 11;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::kLrs,    Metric::kDps,    Metric::kGas,    Metric::kGbeLrs,
    Metric::kGbeDps, Metric::kGbeGas, Metric::kSweLrs, Metric::kSweDps,
    Metric::kSweGas, Metric::kGae,    Metric::kLre,
};

/// The efficiency battery used for critical heights and l1 comparisons.
inline constexpr std::array<Metric, 8> kEfficiencyMetrics = {
    Metric::kGae,    Metric::kLre,    Metric::kGbeLrs, Metric::kGbeDps,
    Metric::kGbeGas, Metric::kSweLrs, Metric::kSweDps, Metric::kSweGas,
};

const char* to_string(Metric metric);
Metric parse_metric(std::string_view text);
/// Stepwise metrics have no value at height 0.
bool is_stepwise(Metric metric);

/// Summed leaf solutions of the tree cut at one height, with the derived
/// percentages. Stepwise fields are zero at height 0.
struct HeightEfficiencies {
  Rational lrs;
  std::int64_t dps = 0;
  std::int64_t gas = 0;
  Rational gbe_lrs, gbe_dps, gbe_gas;
  Rational swe_lrs, swe_dps, swe_gas;
  Rational gae, lre;

  Rational get(Metric metric) const;
};

struct EfficiencySeries {
  std::vector<HeightEfficiencies> rows;  ///< index = height 0..H

  int height() const { return static_cast<int>(rows.size()) - 1; }
  Rational value(Metric metric, int h) const { return rows.at(static_cast<std::size_t>(h)).get(metric); }
};

/// Per-height means over a batch of realizations.
struct AveragedSeries {
  std::size_t realizations = 0;
  std::vector<std::array<double, kMetricCount>> rows;

  int height() const { return static_cast<int>(rows.size()) - 1; }
  double value(Metric metric, int h) const {
    return rows.at(static_cast<std::size_t>(h))[static_cast<std::size_t>(metric)];
  }
  std::vector<double> column(Metric metric) const;
};

/// 100 * (value - base) / base; zero when base is zero.
Rational percent_change(const Rational& value, const Rational& base);

/// solve_triple on every vertex, in pre-order.
std::vector<SolutionTriple> solve_nodes(const DCTree& tree);

EfficiencySeries efficiency_series(const DCTree& tree, std::span<const SolutionTriple> triples);

/// Solves every vertex, then sums leaf solutions per pruning height.
EfficiencySeries solve_tree(const DCTree& tree);

/// Field-wise arithmetic mean, accumulated in input order. Throws
/// Error(kInvalidInput) on an empty batch or mismatched heights.
AveragedSeries average_series(std::span<const EfficiencySeries> series);

enum class Aggregation { kMean, kMax };
Aggregation parse_aggregation(std::string_view text);

/// Critical height of one efficiency across a strategy domain.
///
/// `columns[v][h]` is the averaged efficiency for strategy value v at height
/// h. The slope at height h aggregates (over v) the increment from h-1 to h.
/// The result is the first height h >= 2 whose slope exceeds twice the slope
/// at h-1, i.e. where deterioration starts to blow up; the tree height when
/// that never happens.
int critical_height(std::span<const std::vector<double>> columns,
                    Aggregation aggregation = Aggregation::kMean);

int critical_height(std::span<const AveragedSeries> per_value, Metric metric,
                    Aggregation aggregation = Aggregation::kMean);

/// Mode of per-efficiency critical heights; ties go to the smaller height.
int critical_height_mode(std::span<const int> heights);

enum class Winner { kFirst, kSecond, kTie };

struct L1Comparison {
  double norm_first = 0.0;
  double norm_second = 0.0;
  Winner winner = Winner::kTie;
};

/// Sum of absolute entries of each array; the smaller norm wins.
L1Comparison l1_compare(std::span<const double> first, std::span<const double> second);

/// Flattens {avg_v(metric)(h) : v, metric, h = 1..h_tilde} into one list.
std::vector<double> flatten_efficiencies(std::span<const AveragedSeries> per_value,
                                         std::span<const Metric> metrics, int h_tilde);

}  // namespace dcknap
