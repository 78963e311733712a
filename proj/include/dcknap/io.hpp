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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcknap/dctree.hpp"
#include "dcknap/metrics.hpp"
#include "dcknap/model.hpp"
#include "dcknap/montecarlo.hpp"

namespace dcknap {

/// A batch of realizations in the Available_Rooms layout: one row per room,
/// one column per realization, then a SUM row and a DEMAND row.
///
///   room,realization_1,realization_2
///   0,113,47
///   ...
///   SUM,704,624
///   DEMAND,633,561
struct InstanceBatch {
  std::vector<std::string> labels;                 ///< column headers
  std::vector<RoomId> rooms;                       ///< row labels
  std::vector<std::vector<std::int64_t>> columns;  ///< capacities per column
  std::vector<std::int64_t> demands;

  std::size_t column_count() const noexcept { return labels.size(); }
  /// Resolves a column by header label or by 1-based index.
  std::size_t column_index(const std::string& column) const;
  ProblemInstance instance(std::size_t column, std::int64_t rate) const;
};

InstanceBatch batch_from_realizations(const std::vector<Realization>& realizations);

void write_instance_csv(std::ostream& out, const InstanceBatch& batch);
/// Throws Error(kInvalidInput) on malformed input. The SUM row is recomputed
/// on write and ignored on read; DEMAND is authoritative.
InstanceBatch read_instance_csv(std::istream& in);
InstanceBatch read_instance_csv_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// Rooms (in root list order) x vertices 0/1 membership, then a D row.
std::string membership_table_csv(const DCTree& tree);

/// Height, LRS, DPS, GAS, GbE_*, SwE_*, GAE, LRE at 2 decimals.
std::string efficiency_table_csv(const EfficiencySeries& series);

/// Round-half-away-from-zero rendering of a double through its exact value.
std::string format_fixed(double value, int decimals = 2);

}  // namespace dcknap
