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
#include <span>
#include <string_view>
#include <vector>

#include "dcknap/model.hpp"
#include "dcknap/rational.hpp"

namespace dcknap {

struct SolveResult {
  Selection selection;
  std::int64_t value = 0;
};

struct LpRelaxation {
  Rational value;
  /// Fractional solution, one entry per position, each in [0, 1].
  std::vector<Rational> solution;
  /// Position of the single room taken fractionally; empty on an exact fill.
  std::optional<std::size_t> fractional_position;

  std::optional<RoomId> fractional_room(const ProblemInstance& instance) const {
    if (!fractional_position) return std::nullopt;
    return instance.room_ids()[*fractional_position];
  }
};

/// LP lower bound, exact optimum and greedy upper bound of one (sub)problem.
struct SolutionTriple {
  Rational lrs;
  std::int64_t dps = 0;
  std::int64_t gas = 0;
  Selection greedy_selection;
  Selection exact_selection;
};

/// Greedy by specific weight (largest c/p first, ties by position): take rooms
/// until the demand is covered.
SolveResult greedy_solve(const ProblemInstance& instance);

/// Exact optimum through the complementary max-profit knapsack with budget
/// sum(c) - D. Among co-optimal covers returns the lexicographically smallest
/// selection (position 0 most significant).
SolveResult dp_solve(const ProblemInstance& instance);

/// Closed-form LP relaxation: fill whole rooms in specific-weight order, then
/// at most one room fractionally.
LpRelaxation lp_relax_solve(const ProblemInstance& instance);

/// Rounds every positive LP entry up to 1.
Selection associated_integer_solution(std::span<const Rational> lp_solution);

inline constexpr std::size_t kBruteForceMaxRooms = 24;

/// Exhaustive search over all 2^N selections; testing oracle only.
SolveResult brute_force_solve(const ProblemInstance& instance);

/// Runs all three solvers and checks lrs <= dps <= gas.
SolutionTriple solve_triple(const ProblemInstance& instance);

enum class SortKey { kProctors, kCapacity, kSpecificWeight, kRandom };

struct SortCriterion {
  SortKey key = SortKey::kSpecificWeight;
  bool descending = true;
  /// Only used by kRandom.
  std::uint64_t seed = 0;

  friend bool operator==(const SortCriterion&, const SortCriterion&) = default;
};

/// Positions of `instance` ordered by `criterion`; ties keep ascending position.
std::vector<std::size_t> sort_rooms(const ProblemInstance& instance,
                                    const SortCriterion& criterion);

/// "p", "c", "gamma", "random" (plus long aliases).
SortKey parse_sort_key(std::string_view text);
const char* to_string(SortKey key);

}  // namespace dcknap
