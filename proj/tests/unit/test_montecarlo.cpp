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


#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dcknap/error.hpp"
#include "dcknap/montecarlo.hpp"
#include "dcknap/random.hpp"

using namespace dcknap;

namespace {

double mean(const std::vector<std::int64_t>& v) {
  return static_cast<double>(std::accumulate(v.begin(), v.end(), std::int64_t{0})) /
         static_cast<double>(v.size());
}

ExperimentParams small_params() {
  ExperimentParams p;
  p.n_rooms = 32;
  p.realizations = 6;
  p.master_seed = 99;
  return p;
}

}  // namespace

TEST_CASE("rng helpers stay in range and are reproducible") {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t x = a.between(-3, 3);
    CHECK(x == b.between(-3, 3));
    CHECK(x >= -3);
    CHECK(x <= 3);
    const double u = a.unit();
    CHECK(u == b.unit());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK_THROWS_AS(a.below(0), Error);
  CHECK_THROWS_AS(a.between(2, 1), Error);
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2, 0) != derive_seed(1, 2, 1));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
}

TEST_CASE("uniform capacities cover 40..120") {
  const auto caps = sample_capacities(Distribution::kUniform, 20000, 1);
  CHECK(*std::min_element(caps.begin(), caps.end()) == 40);
  CHECK(*std::max_element(caps.begin(), caps.end()) == 120);
  CHECK(mean(caps) == doctest::Approx(80.0).epsilon(0.01));
}

TEST_CASE("poisson and binomial capacities have the expected means") {
  const auto pois = sample_capacities(Distribution::kPoisson, 20000, 2);
  const auto bin = sample_capacities(Distribution::kBinomial, 20000, 3);
  CHECK(std::abs(mean(pois) - 65.0) < 1.0);
  CHECK(std::abs(mean(bin) - 96.0) < 1.5);
  CHECK(*std::min_element(pois.begin(), pois.end()) >= 1);
  CHECK(*std::min_element(bin.begin(), bin.end()) >= 1);
}

TEST_CASE("sampling is a pure function of the seed") {
  CHECK(sample_capacities(Distribution::kPoisson, 64, 9) ==
        sample_capacities(Distribution::kPoisson, 64, 9));
  CHECK(sample_capacities(Distribution::kPoisson, 64, 9) !=
        sample_capacities(Distribution::kPoisson, 64, 10));
  CHECK_THROWS_AS(sample_capacities(Distribution::kUniform, 0, 1), Error);
}

TEST_CASE("demand is the floor of occupancy times total capacity") {
  const Realization r = make_realization({113, 54, 95, 89, 85, 87, 76, 105}, Rational(9, 10));
  CHECK(r.total_capacity() == 704);
  CHECK(r.demand == 633);
  CHECK(make_realization({47, 67, 65, 95, 72, 60, 110, 108}, Rational(9, 10)).demand == 561);
  CHECK(make_realization({10}, Rational(1)).demand == 10);
  CHECK_THROWS_AS(make_realization({10}, Rational(0)), Error);
  CHECK_THROWS_AS(make_realization({10}, Rational(11, 10)), Error);
}

TEST_CASE("distribution names") {
  CHECK(parse_distribution("Ud") == Distribution::kUniform);
  CHECK(parse_distribution("Pd") == Distribution::kPoisson);
  CHECK(parse_distribution("binomial") == Distribution::kBinomial);
  CHECK_THROWS_AS(parse_distribution("normal"), Error);
}

TEST_CASE("parameter validation") {
  ExperimentParams p = standard_setting();
  CHECK_NOTHROW(p.validate());
  CHECK(p.n_rooms == 512);
  CHECK(p.realizations == 50);

  ExperimentParams bl = standard_setting(TreeAlgorithm::kBalanced);
  CHECK_NOTHROW(bl.validate());
  bl.head_fraction = Rational(1, 2);
  CHECK_THROWS_AS(bl.validate(), Error);

  ExperimentParams bad = p;
  bad.occupancy = Rational(95, 100);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.head_fraction = Rational(1);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.head_fraction.reset();
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.rate = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = p;
  bad.realizations = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("experiments are deterministic and independent of worker count") {
  const ExperimentParams p = small_params();
  const ExperimentResult one = run_experiment(p, 1);
  const ExperimentResult four = run_experiment(p, 4);
  CHECK(one.average.rows == four.average.rows);
  REQUIRE(one.realizations.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(one.realizations[i].capacities == four.realizations[i].capacities);
    CHECK(one.series[i].rows.size() == four.series[i].rows.size());
  }
  CHECK(one.resampled == 0);
  std::set<std::uint64_t> seeds;
  for (const auto& r : one.realizations) seeds.insert(r.seed);
  CHECK(seeds.size() == 6);
}

TEST_CASE("pairing: the same realizations are used for every sweep value") {
  const ExperimentParams p = small_params();
  const auto entries = sweep(p, SweepVariable::kRate, {"34", "74"});
  REQUIRE(entries.size() == 2);
  for (std::size_t i = 0; i < p.realizations; ++i) {
    CHECK(entries[0].result.realizations[i].capacities ==
          entries[1].result.realizations[i].capacities);
  }
  CHECK(entries[0].params.rate == 34);
  CHECK(entries[1].label == "74");
}

TEST_CASE("sweep values are applied and validated") {
  const ExperimentParams p = small_params();
  CHECK(with_sweep_value(p, SweepVariable::kOccupancy, "0.55").occupancy == Rational(11, 20));
  CHECK(with_sweep_value(p, SweepVariable::kSort, "c").sort == SortKey::kCapacity);
  CHECK(*with_sweep_value(p, SweepVariable::kHeadFraction, "0.35").head_fraction ==
        Rational(7, 20));
  CHECK_THROWS_AS(with_sweep_value(p, SweepVariable::kRate, "54.5"), Error);
  ExperimentParams bl = p;
  bl.tree_alg = TreeAlgorithm::kBalanced;
  bl.head_fraction.reset();
  CHECK_THROWS_AS(sweep(bl, SweepVariable::kHeadFraction, {"0.5"}), Error);
  CHECK_THROWS_AS(sweep(p, SweepVariable::kRate, {}), Error);
  CHECK(default_domain(SweepVariable::kRate).size() == 5);
  CHECK(default_domain(SweepVariable::kOccupancy).size() == 9);
  CHECK(parse_sweep_variable("o") == SweepVariable::kOccupancy);
  CHECK_THROWS_AS(parse_sweep_variable("x"), Error);
}

TEST_CASE("averaged dps efficiency grows with height on uniform rooms") {
  ExperimentParams p = small_params();
  p.n_rooms = 128;
  p.realizations = 8;
  const ExperimentResult r = run_experiment(p, 2);
  const auto col = r.average.column(Metric::kGbeDps);
  CHECK(col.front() == 0.0);
  for (std::size_t h = 1; h < col.size(); ++h) CHECK(col[h] >= col[h - 1]);
}
