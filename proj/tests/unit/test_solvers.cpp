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
#include "dcknap/solvers.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dcknap;

namespace {

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 3> kCapacityRanges = {
    std::pair<std::int64_t, std::int64_t>{40, 120}, {45, 85}, {80, 112}};

ProblemInstance draw(Rng& rng, std::size_t max_rooms) {
  const auto [lo, hi] = kCapacityRanges[rng.below(kCapacityRanges.size())];
  const std::size_t n = 1 + rng.below(max_rooms);
  const Rational occupancy(50 + 5 * static_cast<std::int64_t>(rng.below(9)), 100);
  return oracle::random_instance(rng, n, lo, hi, rng.between(20, 130), occupancy);
}

}  // namespace

TEST_CASE("two-room micro example") {
  ProblemInstance inst({100, 40}, {4, 2}, 40);
  const SolveResult greedy = greedy_solve(inst);
  CHECK(greedy.value == 4);
  CHECK(greedy.selection.bits() == std::vector<bool>{true, false});
  CHECK(dp_solve(inst).value == 2);
  CHECK(dp_solve(inst).selection.bits() == std::vector<bool>{false, true});
  const LpRelaxation lp = lp_relax_solve(inst);
  CHECK(lp.value == Rational(8, 5));
  REQUIRE(lp.fractional_position.has_value());
  CHECK(*lp.fractional_position == 0);
  CHECK(lp.solution[0] == Rational(2, 5));
  CHECK(lp.solution[1] == Rational(0));
  CHECK(associated_integer_solution(lp.solution) == greedy.selection);
}

TEST_CASE("eight-room fixture, first realization") {
  const ProblemInstance inst = fixtures::realization(0);
  CHECK(inst.demand() == 633);
  const SolutionTriple t = solve_triple(inst);
  CHECK(t.lrs == Rational(1595, 113));
  CHECK(t.lrs.to_fixed(2) == "14.12");
  CHECK(t.dps == 15);
  CHECK(t.gas == 16);
  CHECK(t.exact_selection.feasible(inst));
  CHECK(t.exact_selection.value(inst) == 15);
  CHECK(t.greedy_selection.count() == 8);
  CHECK(lp_relax_solve(inst).fractional_room(inst) == RoomId{0});
}

TEST_CASE("demand zero needs no rooms") {
  ProblemInstance inst({10, 20}, {1, 1}, 0);
  CHECK(greedy_solve(inst).value == 0);
  CHECK(dp_solve(inst).value == 0);
  CHECK(lp_relax_solve(inst).value == Rational(0));
  CHECK_FALSE(lp_relax_solve(inst).fractional_position.has_value());
  CHECK(brute_force_solve(inst).value == 0);
}

TEST_CASE("demand equal to total capacity takes every room") {
  ProblemInstance inst({10, 20, 5}, {2, 1, 3}, 35);
  CHECK(greedy_solve(inst).value == 6);
  CHECK(dp_solve(inst).value == 6);
  CHECK(lp_relax_solve(inst).value == Rational(6));
}

TEST_CASE("solvers reject infeasible instances with the deficit") {
  ProblemInstance inst({10, 20}, {1, 1}, 45);
  CHECK_THROWS_AS(greedy_solve(inst), InfeasibleError);
  CHECK_THROWS_AS(dp_solve(inst), InfeasibleError);
  CHECK_THROWS_AS(lp_relax_solve(inst), InfeasibleError);
  CHECK_THROWS_AS(brute_force_solve(inst), InfeasibleError);
  try {
    solve_triple(inst);
    FAIL("expected an error");
  } catch (const InfeasibleError& e) {
    CHECK(e.deficit() == 15);
  }
}

TEST_CASE("brute force is size limited") {
  std::vector<std::int64_t> caps(kBruteForceMaxRooms + 1, 10);
  ProblemInstance inst = ProblemInstance::from_rate(caps, 5, 10);
  try {
    brute_force_solve(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSizeLimit);
  }
}

TEST_CASE("exact solver agrees with enumeration, value and selection") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const ProblemInstance inst = draw(rng, 12);
    const SolveResult dp = dp_solve(inst);
    const SolveResult bf = brute_force_solve(inst);
    CAPTURE(trial);
    CHECK(dp.value == *oracle::min_cover(inst));
    CHECK(dp.value == bf.value);
    CHECK(dp.selection == bf.selection);
    CHECK(dp.selection.feasible(inst));
    CHECK(dp.selection.value(inst) == dp.value);
  }
}

TEST_CASE("LP relaxation matches vertex enumeration") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const ProblemInstance inst = draw(rng, 10);
    const LpRelaxation lp = lp_relax_solve(inst);
    CAPTURE(trial);
    CHECK(lp.value == oracle::lp_value(inst));
    Rational load(0);
    Rational cost(0);
    int fractional = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      CHECK(lp.solution[i] >= Rational(0));
      CHECK(lp.solution[i] <= Rational(1));
      if (!lp.solution[i].is_integer()) ++fractional;
      load += lp.solution[i] * Rational(inst.capacities()[i]);
      cost += lp.solution[i] * Rational(inst.proctors()[i]);
    }
    CHECK(fractional <= 1);
    CHECK(load == Rational(inst.demand()));
    CHECK(cost == lp.value);
  }
}

TEST_CASE("bound sandwich and greedy gap") {
  Rng rng(314);
  for (int trial = 0; trial < 400; ++trial) {
    const ProblemInstance inst = draw(rng, 40);
    const SolutionTriple t = solve_triple(inst);
    CHECK(t.lrs <= Rational(t.dps));
    CHECK(t.dps <= t.gas);
    const std::int64_t max_p =
        *std::max_element(inst.proctors().begin(), inst.proctors().end());
    CHECK(Rational(t.gas) - t.lrs < Rational(max_p));
    // Rounding the LP solution up reproduces the greedy cover.
    CHECK(associated_integer_solution(lp_relax_solve(inst).solution) == t.greedy_selection);
  }
}

TEST_CASE("greedy is exact once every room needs one proctor") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(30);
    std::vector<std::int64_t> caps(n);
    for (auto& c : caps) c = rng.between(1, 120);
    const std::int64_t max_c = *std::max_element(caps.begin(), caps.end());
    const std::int64_t total = std::accumulate(caps.begin(), caps.end(), std::int64_t{0});
    const ProblemInstance inst =
        ProblemInstance::from_rate(caps, max_c + rng.between(0, 50), rng.between(0, total));
    CHECK(greedy_solve(inst).value == dp_solve(inst).value);
  }
}

TEST_CASE("LP value is demand over rate when the rate divides every capacity") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::int64_t rate = rng.between(1, 40);
    const std::size_t n = 1 + rng.below(30);
    std::vector<std::int64_t> caps(n);
    for (auto& c : caps) c = rate * rng.between(1, 6);
    const std::int64_t total = std::accumulate(caps.begin(), caps.end(), std::int64_t{0});
    const ProblemInstance inst = ProblemInstance::from_rate(caps, rate, rng.between(0, total));
    CHECK(lp_relax_solve(inst).value == Rational(inst.demand(), rate));
  }
}

TEST_CASE("sort criteria") {
  ProblemInstance inst({30, 50, 30, 10}, {3, 2, 1, 1}, 50);
  CHECK(sort_rooms(inst, {SortKey::kCapacity, true, 0}) == std::vector<std::size_t>{1, 0, 2, 3});
  CHECK(sort_rooms(inst, {SortKey::kCapacity, false, 0}) == std::vector<std::size_t>{3, 0, 2, 1});
  CHECK(sort_rooms(inst, {SortKey::kProctors, true, 0}) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(sort_rooms(inst, {SortKey::kSpecificWeight, true, 0}) ==
        std::vector<std::size_t>{2, 1, 0, 3});

  const auto a = sort_rooms(inst, {SortKey::kRandom, true, 42});
  const auto b = sort_rooms(inst, {SortKey::kRandom, true, 42});
  CHECK(a == b);
  std::set<std::size_t> seen(a.begin(), a.end());
  CHECK(seen.size() == 4);
  CHECK(*seen.rbegin() == 3);
}

TEST_CASE("sort key names") {
  CHECK(parse_sort_key("gamma") == SortKey::kSpecificWeight);
  CHECK(parse_sort_key("p") == SortKey::kProctors);
  CHECK(parse_sort_key("capacity") == SortKey::kCapacity);
  CHECK(parse_sort_key("random") == SortKey::kRandom);
  for (SortKey k : {SortKey::kProctors, SortKey::kCapacity, SortKey::kSpecificWeight, SortKey::kRandom}) {
    CHECK(parse_sort_key(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_sort_key("weight"), Error);
}
