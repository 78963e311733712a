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


#include "dcknap/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dcknap/error.hpp"

namespace dcknap {

ProblemInstance::ProblemInstance(std::vector<std::int64_t> capacities,
                                 std::vector<std::int64_t> proctors, std::int64_t demand,
                                 std::vector<RoomId> room_ids)
    : capacities_(std::move(capacities)),
      proctors_(std::move(proctors)),
      room_ids_(std::move(room_ids)),
      demand_(demand) {
  if (capacities_.empty()) {
    throw Error(ErrorKind::kInvalidInput, "instance needs at least one room");
  }
  if (room_ids_.empty()) {
    room_ids_.resize(capacities_.size());
    std::iota(room_ids_.begin(), room_ids_.end(), RoomId{0});
  }
  if (proctors_.size() != capacities_.size() || room_ids_.size() != capacities_.size()) {
    throw Error(ErrorKind::kInvalidInput,
                "capacities, proctors and room ids must have equal length");
  }
  if (demand_ < 0) throw Error(ErrorKind::kInvalidInput, "demand must be non-negative");
  for (std::size_t i = 0; i < capacities_.size(); ++i) {
    if (capacities_[i] < 1 || proctors_[i] < 1) {
      throw Error(ErrorKind::kInvalidInput,
                  "room " + std::to_string(room_ids_[i]) + " has non-positive capacity or proctors");
    }
    total_capacity_ += capacities_[i];
    total_proctors_ += proctors_[i];
    if (total_capacity_ > kMaxTotalCapacity || total_proctors_ > kMaxTotalCapacity) {
      throw Error(ErrorKind::kInvalidInput, "total capacity exceeds 2^31");
    }
  }
  if (demand_ > kMaxTotalCapacity) {
    throw Error(ErrorKind::kInvalidInput, "demand exceeds 2^31");
  }
}

ProblemInstance ProblemInstance::from_rate(std::vector<std::int64_t> capacities,
                                           std::int64_t rate, std::int64_t demand,
                                           std::vector<RoomId> room_ids) {
  auto proctors = proctors_from_rate(capacities, rate);
  return ProblemInstance(std::move(capacities), std::move(proctors), demand,
                         std::move(room_ids));
}

std::int64_t ProblemInstance::deficit() const noexcept {
  return std::max<std::int64_t>(0, demand_ - total_capacity_);
}

void ProblemInstance::require_feasible(const char* context) const {
  if (!feasible()) throw InfeasibleError(deficit(), context);
}

ProblemInstance ProblemInstance::subset(std::span<const std::size_t> positions,
                                        std::int64_t demand) const {
  std::vector<std::int64_t> caps;
  std::vector<std::int64_t> procs;
  std::vector<RoomId> ids;
  caps.reserve(positions.size());
  procs.reserve(positions.size());
  ids.reserve(positions.size());
  for (std::size_t pos : positions) {
    if (pos >= size()) throw Error(ErrorKind::kOutOfRange, "room position out of range");
    caps.push_back(capacities_[pos]);
    procs.push_back(proctors_[pos]);
    ids.push_back(room_ids_[pos]);
  }
  return ProblemInstance(std::move(caps), std::move(procs), demand, std::move(ids));
}

ProblemInstance ProblemInstance::with_demand(std::int64_t demand) const {
  return ProblemInstance(capacities_, proctors_, demand, room_ids_);
}

std::size_t Selection::count() const {
  return static_cast<std::size_t>(std::count(chosen_.begin(), chosen_.end(), true));
}

std::int64_t Selection::value(const ProblemInstance& instance) const {
  if (size() != instance.size()) throw Error(ErrorKind::kInvalidInput, "selection size mismatch");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (chosen_[i]) total += instance.proctors()[i];
  }
  return total;
}

std::int64_t Selection::load(const ProblemInstance& instance) const {
  if (size() != instance.size()) throw Error(ErrorKind::kInvalidInput, "selection size mismatch");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (chosen_[i]) total += instance.capacities()[i];
  }
  return total;
}

bool Selection::feasible(const ProblemInstance& instance) const {
  return load(instance) >= instance.demand();
}

Selection Selection::complement() const {
  std::vector<bool> flipped(chosen_.size());
  for (std::size_t i = 0; i < chosen_.size(); ++i) flipped[i] = !chosen_[i];
  return Selection(std::move(flipped));
}

std::vector<std::int64_t> proctors_from_rate(std::span<const std::int64_t> capacities,
                                             std::int64_t rate) {
  if (rate < 1) {
    throw Error(ErrorKind::kInvalidParameter,
                "student-proctor rate must be at least 1, got " + std::to_string(rate));
  }
  std::vector<std::int64_t> proctors;
  proctors.reserve(capacities.size());
  for (std::int64_t c : capacities) {
    if (c < 1) throw Error(ErrorKind::kInvalidInput, "capacities must be positive");
    proctors.push_back((c + rate - 1) / rate);
  }
  return proctors;
}

SpecificWeights specific_weights(const ProblemInstance& instance) {
  SpecificWeights out;
  out.weights.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out.weights.emplace_back(instance.capacities()[i], instance.proctors()[i]);
  }
  return out;
}

std::vector<std::size_t> specific_weight_order(const ProblemInstance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto c = instance.capacities();
  auto p = instance.proctors();
  // c_a/p_a > c_b/p_b  <=>  c_a*p_b > c_b*p_a; products stay below 2^62.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c[a] * p[b] > c[b] * p[a];
  });
  return order;
}

StandardKnapsack to_standard_knapsack(const ProblemInstance& instance) {
  instance.require_feasible("to_standard_knapsack");
  StandardKnapsack out;
  out.budget = instance.total_capacity() - instance.demand();
  out.items.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out.items.push_back({instance.capacities()[i], instance.proctors()[i]});
  }
  return out;
}

}  // namespace dcknap
