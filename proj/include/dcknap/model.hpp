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
#include <span>
#include <vector>

#include "dcknap/rational.hpp"

namespace dcknap {

/// Stable label of a room: its column position in the source data. Never
/// reassigned after sorting or splitting.
using RoomId = std::size_t;

/// Upper bound on total capacity; keeps every intermediate product of two
/// capacity-scale quantities inside int64.
inline constexpr std::int64_t kMaxTotalCapacity = std::int64_t{1} << 31;

/// Min-cost covering knapsack: pick rooms so that at least `demand` students
/// are seated while the total number of proctors is minimal.
class ProblemInstance {
 public:
  /// `room_ids` defaults to 0..N-1. Throws Error(kInvalidInput) when the
  /// arrays disagree in length, are empty, or hold non-positive entries.
  ProblemInstance(std::vector<std::int64_t> capacities, std::vector<std::int64_t> proctors,
                  std::int64_t demand, std::vector<RoomId> room_ids = {});

  /// Proctor counts derived from a student-proctor rate.
  static ProblemInstance from_rate(std::vector<std::int64_t> capacities, std::int64_t rate,
                                   std::int64_t demand, std::vector<RoomId> room_ids = {});

  std::size_t size() const noexcept { return capacities_.size(); }
  std::span<const std::int64_t> capacities() const noexcept { return capacities_; }
  std::span<const std::int64_t> proctors() const noexcept { return proctors_; }
  std::span<const RoomId> room_ids() const noexcept { return room_ids_; }
  std::int64_t demand() const noexcept { return demand_; }

  std::int64_t total_capacity() const noexcept { return total_capacity_; }
  std::int64_t total_proctors() const noexcept { return total_proctors_; }
  bool feasible() const noexcept { return total_capacity_ >= demand_; }
  /// max(0, demand - total capacity).
  std::int64_t deficit() const noexcept;

  /// Throws InfeasibleError when total capacity is below demand.
  void require_feasible(const char* context) const;

  /// Sub-instance over the given positions (kept in the given order) with its
  /// own demand. Room ids are carried over.
  ProblemInstance subset(std::span<const std::size_t> positions, std::int64_t demand) const;
  ProblemInstance with_demand(std::int64_t demand) const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  std::vector<std::int64_t> capacities_;
  std::vector<std::int64_t> proctors_;
  std::vector<RoomId> room_ids_;
  std::int64_t demand_ = 0;
  std::int64_t total_capacity_ = 0;
  std::int64_t total_proctors_ = 0;
};

/// 0/1 choice per room, aligned with an instance's positions.
class Selection {
 public:
  Selection() = default;
  explicit Selection(std::size_t size) : chosen_(size, false) {}
  explicit Selection(std::vector<bool> chosen) : chosen_(std::move(chosen)) {}

  std::size_t size() const noexcept { return chosen_.size(); }
  bool operator[](std::size_t i) const { return chosen_[i]; }
  void set(std::size_t i, bool value = true) { chosen_[i] = value; }
  const std::vector<bool>& bits() const noexcept { return chosen_; }
  std::size_t count() const;

  /// Sum of proctors over chosen rooms.
  std::int64_t value(const ProblemInstance& instance) const;
  /// Sum of capacities over chosen rooms.
  std::int64_t load(const ProblemInstance& instance) const;
  /// Covers the instance demand.
  bool feasible(const ProblemInstance& instance) const;
  Selection complement() const;

  friend bool operator==(const Selection&, const Selection&) = default;
  /// Lexicographic with `false < true`, first position most significant.
  friend bool operator<(const Selection& lhs, const Selection& rhs) {
    return lhs.chosen_ < rhs.chosen_;
  }

 private:
  std::vector<bool> chosen_;
};

/// Capacity per proctor, c_i / p_i, kept exact.
struct SpecificWeights {
  std::vector<Rational> weights;
};

/// p_i = ceil(c_i / rate). Throws Error(kInvalidParameter) for rate < 1.
std::vector<std::int64_t> proctors_from_rate(std::span<const std::int64_t> capacities,
                                             std::int64_t rate);

SpecificWeights specific_weights(const ProblemInstance& instance);

/// Positions ordered by specific weight, largest first; equal weights keep
/// ascending position order. Shared by the greedy, the LP relaxation and the
/// tree sort so that all three agree on ties.
std::vector<std::size_t> specific_weight_order(const ProblemInstance& instance);

struct KnapsackItem {
  std::int64_t weight = 0;
  std::int64_t profit = 0;
  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

/// Max-profit 0/1 knapsack obtained by complementing the covering problem:
/// the rooms left *out* of a cover form a packing of budget sum(c) - D.
struct StandardKnapsack {
  std::int64_t budget = 0;
  std::vector<KnapsackItem> items;
};

/// Throws InfeasibleError when sum(c) < D.
StandardKnapsack to_standard_knapsack(const ProblemInstance& instance);

}  // namespace dcknap
