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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcknap/dctree.hpp"
#include "dcknap/metrics.hpp"
#include "dcknap/rational.hpp"
#include "dcknap/solvers.hpp"

namespace dcknap {

/// Room-capacity laws: Uniform on [40, 120], Poisson(65), Binomial(480, 0.2).
enum class Distribution { kUniform, kPoisson, kBinomial };

Distribution parse_distribution(std::string_view text);
const char* to_string(Distribution dist);

inline constexpr std::int64_t kUniformMin = 40;
inline constexpr std::int64_t kUniformMax = 120;
inline constexpr double kPoissonMean = 65.0;
inline constexpr int kBinomialTrials = 480;
inline constexpr double kBinomialSuccess = 0.2;

/// n capacities, all >= 1 (zero draws are redrawn). Deterministic in `seed`.
std::vector<std::int64_t> sample_capacities(Distribution dist, std::size_t n, std::uint64_t seed);

struct Realization {
  std::vector<std::int64_t> capacities;
  std::int64_t demand = 0;
  std::uint64_t seed = 0;

  std::int64_t total_capacity() const;
};

/// demand = floor(occupancy * sum(c)); occupancy must lie in (0, 1].
Realization make_realization(Distribution dist, std::size_t n, const Rational& occupancy,
                             std::uint64_t seed);
Realization make_realization(std::vector<std::int64_t> capacities, const Rational& occupancy,
                             std::uint64_t seed = 0);

/// One experiment P = (N, dist, o, r, talg, s, f, m) plus batch controls.
/// Defaults are the standard setting.
struct ExperimentParams {
  std::size_t n_rooms = 512;
  Distribution dist = Distribution::kUniform;
  Rational occupancy = Rational(9, 10);
  std::int64_t rate = 54;
  TreeAlgorithm tree_alg = TreeAlgorithm::kHeadLeft;
  SortKey sort = SortKey::kSpecificWeight;
  /// Present exactly when tree_alg is head-left.
  std::optional<Rational> head_fraction = Rational(1, 2);
  std::size_t min_size = 4;
  Rounding rounding = Rounding::kCeil;
  std::size_t realizations = 50;
  std::uint64_t master_seed = 2020;

  /// Throws Error(kInvalidParameter) on out-of-domain values.
  void validate() const;
  TreeParams tree_params(std::uint64_t sort_seed) const;
};

/// Standard setting for the given tree algorithm (blT drops the head fraction).
ExperimentParams standard_setting(TreeAlgorithm algorithm = TreeAlgorithm::kHeadLeft);

inline constexpr std::size_t kMaxSplitRetries = 32;

struct ExperimentResult {
  AveragedSeries average;
  std::vector<EfficiencySeries> series;     ///< per realization, in index order
  std::vector<Realization> realizations;    ///< the samples actually used
  std::size_t resampled = 0;                ///< realizations redrawn after a split failure
};

/// Runs K realizations (concurrently when workers != 1; 0 = hardware
/// concurrency) and averages them in realization order. Realization i uses
/// derive_seed(master_seed, i, attempt); a realization whose tree cannot be
/// split feasibly is redrawn with the next attempt number.
ExperimentResult run_experiment(const ExperimentParams& params, unsigned workers = 1);

enum class SweepVariable { kOccupancy, kRate, kSort, kHeadFraction };

SweepVariable parse_sweep_variable(std::string_view text);
const char* to_string(SweepVariable variable);
/// o: 0.50..0.90 step 0.05; r: 34..74 step 10; s: p, c, gamma, random;
/// f: 0.35..0.65 step 0.05.
std::vector<std::string> default_domain(SweepVariable variable);

/// Copy of `params` with the swept variable set from its text form.
ExperimentParams with_sweep_value(const ExperimentParams& params, SweepVariable variable,
                                  std::string_view value);

struct SweepEntry {
  std::string label;
  ExperimentParams params;
  ExperimentResult result;
};

/// One experiment per domain value; all share master_seed, so realization i
/// draws the same capacities for every value.
std::vector<SweepEntry> sweep(const ExperimentParams& params, SweepVariable variable,
                              const std::vector<std::string>& domain, unsigned workers = 1);

}  // namespace dcknap
