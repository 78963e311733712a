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


#include "dcknap/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "dcknap/error.hpp"
#include "dcknap/random.hpp"

namespace dcknap {

namespace {

// Inverse-CDF table for a discrete law on 0..n.
class DiscreteCdf {
 public:
  explicit DiscreteCdf(std::vector<double> pmf) : cdf_(pmf.size()) {
    std::partial_sum(pmf.begin(), pmf.end(), cdf_.begin());
  }

  std::int64_t sample(Rng& rng) const {
    const double u = rng.unit() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::int64_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

const DiscreteCdf& poisson_cdf() {
  static const DiscreteCdf cdf = [] {
    // Mass beyond 200 is below 1e-40 for lambda = 65.
    std::vector<double> pmf(201);
    pmf[0] = std::exp(-kPoissonMean);
    for (std::size_t k = 1; k < pmf.size(); ++k) {
      pmf[k] = pmf[k - 1] * kPoissonMean / static_cast<double>(k);
    }
    return DiscreteCdf(std::move(pmf));
  }();
  return cdf;
}

const DiscreteCdf& binomial_cdf() {
  static const DiscreteCdf cdf = [] {
    std::vector<double> pmf(kBinomialTrials + 1);
    const double q = 1.0 - kBinomialSuccess;
    pmf[0] = std::pow(q, kBinomialTrials);
    for (int k = 1; k <= kBinomialTrials; ++k) {
      pmf[static_cast<std::size_t>(k)] = pmf[static_cast<std::size_t>(k - 1)] *
                                         static_cast<double>(kBinomialTrials - k + 1) /
                                         static_cast<double>(k) * kBinomialSuccess / q;
    }
    return DiscreteCdf(std::move(pmf));
  }();
  return cdf;
}

std::string fixed2(const Rational& value) { return value.to_fixed(2); }

}  // namespace

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform" || text == "Ud" || text == "Ub") return Distribution::kUniform;
  if (text == "poisson" || text == "Pd") return Distribution::kPoisson;
  if (text == "binomial" || text == "Bd") return Distribution::kBinomial;
  throw Error(ErrorKind::kInvalidParameter, "unknown distribution '" + std::string(text) + "'");
}

const char* to_string(Distribution dist) {
  switch (dist) {
    case Distribution::kUniform: return "uniform";
    case Distribution::kPoisson: return "poisson";
    case Distribution::kBinomial: return "binomial";
  }
  return "?";
}

std::vector<std::int64_t> sample_capacities(Distribution dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kInvalidParameter, "need at least one room");
  Rng rng(seed);
  std::vector<std::int64_t> out;
  out.reserve(n);
  while (out.size() < n) {
    std::int64_t c = 0;
    switch (dist) {
      case Distribution::kUniform: c = rng.between(kUniformMin, kUniformMax); break;
      case Distribution::kPoisson: c = poisson_cdf().sample(rng); break;
      case Distribution::kBinomial: c = binomial_cdf().sample(rng); break;
    }
    if (c >= 1) out.push_back(c);
  }
  return out;
}

std::int64_t Realization::total_capacity() const {
  return std::accumulate(capacities.begin(), capacities.end(), std::int64_t{0});
}

Realization make_realization(std::vector<std::int64_t> capacities, const Rational& occupancy,
                             std::uint64_t seed) {
  if (occupancy <= Rational(0) || occupancy > Rational(1)) {
    throw Error(ErrorKind::kInvalidParameter,
                "occupancy must lie in (0, 1], got " + occupancy.to_string());
  }
  Realization out;
  out.capacities = std::move(capacities);
  out.seed = seed;
  out.demand = (occupancy * Rational(out.total_capacity())).floor();
  return out;
}

Realization make_realization(Distribution dist, std::size_t n, const Rational& occupancy,
                             std::uint64_t seed) {
  if (occupancy <= Rational(0) || occupancy > Rational(1)) {
    throw Error(ErrorKind::kInvalidParameter,
                "occupancy must lie in (0, 1], got " + occupancy.to_string());
  }
  return make_realization(sample_capacities(dist, n, seed), occupancy, seed);
}

void ExperimentParams::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::kInvalidParameter, msg); };
  if (n_rooms < 1) fail("n_rooms must be at least 1");
  if (occupancy < Rational(1, 2) || occupancy > Rational(9, 10)) {
    fail("occupancy must lie in [0.5, 0.9], got " + fixed2(occupancy));
  }
  if (rate < 1) fail("rate must be at least 1");
  if (min_size < 1) fail("min_size must be at least 1");
  if (realizations < 1) fail("realizations must be at least 1");
  if (tree_alg == TreeAlgorithm::kBalanced && head_fraction) {
    fail("head_fraction does not apply to the balanced tree");
  }
  if (tree_alg == TreeAlgorithm::kHeadLeft) {
    if (!head_fraction) fail("head_fraction is required for the head-left tree");
    if (*head_fraction <= Rational(0) || *head_fraction >= Rational(1)) {
      fail("head_fraction must lie in (0, 1)");
    }
  }
}

TreeParams ExperimentParams::tree_params(std::uint64_t sort_seed) const {
  TreeParams out;
  out.algorithm = tree_alg;
  out.sort = SortCriterion{sort, true, sort_seed};
  out.head_fraction = head_fraction.value_or(Rational(1, 2));
  out.min_size = min_size;
  out.rounding = rounding;
  return out;
}

ExperimentParams standard_setting(TreeAlgorithm algorithm) {
  ExperimentParams p;
  p.tree_alg = algorithm;
  if (algorithm == TreeAlgorithm::kBalanced) p.head_fraction.reset();
  return p;
}

namespace {

struct RealizationOutcome {
  Realization realization;
  EfficiencySeries series;
  std::size_t retries = 0;
};

RealizationOutcome run_realization(const ExperimentParams& params, std::size_t index) {
  for (std::size_t attempt = 0; attempt <= kMaxSplitRetries; ++attempt) {
    const std::uint64_t seed = derive_seed(params.master_seed, index, attempt);
    Realization realization = make_realization(params.dist, params.n_rooms, params.occupancy, seed);
    ProblemInstance instance =
        ProblemInstance::from_rate(realization.capacities, params.rate, realization.demand);
    try {
      DCTree tree = build_tree(instance, params.tree_params(mix64(seed ^ 0x5eedULL)));
      return {std::move(realization), solve_tree(tree), attempt};
    } catch (const SplitInfeasibleError&) {
      continue;
    }
  }
  throw Error(ErrorKind::kSplitInfeasible,
              "realization " + std::to_string(index) + " could not be split feasibly after " +
                  std::to_string(kMaxSplitRetries + 1) + " draws");
}

}  // namespace

ExperimentResult run_experiment(const ExperimentParams& params, unsigned workers) {
  params.validate();
  const std::size_t k = params.realizations;
  std::vector<std::optional<RealizationOutcome>> outcomes(k);

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, k));

  if (workers <= 1) {
    for (std::size_t i = 0; i < k; ++i) outcomes[i] = run_realization(params, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < k; i = next++) {
          try {
            outcomes[i] = run_realization(params, i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentResult result;
  result.series.reserve(k);
  result.realizations.reserve(k);
  for (auto& outcome : outcomes) {
    result.resampled += outcome->retries > 0 ? 1 : 0;
    result.series.push_back(std::move(outcome->series));
    result.realizations.push_back(std::move(outcome->realization));
  }
  result.average = average_series(result.series);
  return result;
}

SweepVariable parse_sweep_variable(std::string_view text) {
  if (text == "o" || text == "occupancy") return SweepVariable::kOccupancy;
  if (text == "r" || text == "rate") return SweepVariable::kRate;
  if (text == "s" || text == "sort") return SweepVariable::kSort;
  if (text == "f" || text == "head_fraction") return SweepVariable::kHeadFraction;
  throw Error(ErrorKind::kInvalidParameter, "unknown sweep variable '" + std::string(text) + "'");
}

const char* to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::kOccupancy: return "occupancy";
    case SweepVariable::kRate: return "rate";
    case SweepVariable::kSort: return "sort";
    case SweepVariable::kHeadFraction: return "head_fraction";
  }
  return "?";
}

std::vector<std::string> default_domain(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::kOccupancy:
      return {"0.50", "0.55", "0.60", "0.65", "0.70", "0.75", "0.80", "0.85", "0.90"};
    case SweepVariable::kRate: return {"34", "44", "54", "64", "74"};
    case SweepVariable::kSort: return {"p", "c", "gamma", "random"};
    case SweepVariable::kHeadFraction:
      return {"0.35", "0.40", "0.45", "0.50", "0.55", "0.60", "0.65"};
  }
  return {};
}

ExperimentParams with_sweep_value(const ExperimentParams& params, SweepVariable variable,
                                  std::string_view value) {
  ExperimentParams out = params;
  switch (variable) {
    case SweepVariable::kOccupancy: out.occupancy = Rational::parse(value); break;
    case SweepVariable::kRate: {
      Rational r = Rational::parse(value);
      if (!r.is_integer()) {
        throw Error(ErrorKind::kInvalidParameter, "rate must be an integer, got " + std::string(value));
      }
      out.rate = r.floor();
      break;
    }
    case SweepVariable::kSort: out.sort = parse_sort_key(value); break;
    case SweepVariable::kHeadFraction:
      if (params.tree_alg != TreeAlgorithm::kHeadLeft) {
        throw Error(ErrorKind::kInvalidParameter, "head fraction sweep requires the head-left tree");
      }
      out.head_fraction = Rational::parse(value);
      break;
  }
  return out;
}

std::vector<SweepEntry> sweep(const ExperimentParams& params, SweepVariable variable,
                              const std::vector<std::string>& domain, unsigned workers) {
  if (domain.empty()) throw Error(ErrorKind::kInvalidParameter, "sweep domain is empty");
  if (variable == SweepVariable::kHeadFraction && params.tree_alg != TreeAlgorithm::kHeadLeft) {
    throw Error(ErrorKind::kInvalidParameter, "head fraction sweep requires the head-left tree");
  }
  std::vector<SweepEntry> out;
  out.reserve(domain.size());
  for (const std::string& value : domain) {
    ExperimentParams p = with_sweep_value(params, variable, value);
    out.push_back(SweepEntry{value, p, run_experiment(p, workers)});
  }
  return out;
}

}  // namespace dcknap
