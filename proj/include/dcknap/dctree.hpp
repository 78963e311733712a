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
#include <string>
#include <string_view>
#include <vector>

#include "dcknap/model.hpp"
#include "dcknap/rational.hpp"
#include "dcknap/solvers.hpp"

namespace dcknap {

/// How the left child's share of the demand is rounded to an integer.
enum class Rounding { kCeil, kFloor };

enum class TreeAlgorithm {
  kHeadLeft,  ///< left child = leading fraction f of the node's list
  kBalanced,  ///< left child = even (0-based) positions of the node's list
};

struct DemandSplit {
  std::int64_t left = 0;
  std::int64_t right = 0;
  friend bool operator==(const DemandSplit&, const DemandSplit&) = default;
};

/// Capacity-proportional demand split: left = round(D * left_caps / total_caps),
/// right = D - left. Throws Error(kInvalidPartition) unless
/// 0 < left_caps < total_caps.
DemandSplit split_demand(std::int64_t parent_demand, std::int64_t left_caps,
                         std::int64_t total_caps, Rounding rounding);

/// Both children can cover their demand.
bool pair_feasible(std::int64_t left_caps, std::int64_t right_caps, std::int64_t left_demand,
                   std::int64_t right_demand);

/// demand <= (right_caps - 1) / right_caps * total_caps. When it holds a
/// floor-rounded split leaves both children feasible.
bool slack_condition_holds(std::int64_t total_caps, std::int64_t right_caps, std::int64_t demand);

struct TreeParams {
  TreeAlgorithm algorithm = TreeAlgorithm::kHeadLeft;
  SortCriterion sort;
  /// Head-left only.
  Rational head_fraction = Rational(1, 2);
  /// Nodes with more than this many rooms are split.
  std::size_t min_size = 4;
  Rounding rounding = Rounding::kCeil;
};

struct DCNode {
  /// Positions into the tree's instance, in the order inherited from the
  /// root sort.
  std::vector<std::size_t> rooms;
  std::int64_t demand = 0;
  int height = 0;
  std::optional<std::size_t> parent;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;

  bool is_leaf() const noexcept { return !left.has_value(); }
};

/// Binary D&C tree. Nodes are stored in left pre-order, so index 0 is the
/// root and every subtree occupies a contiguous range.
class DCTree {
 public:
  const ProblemInstance& instance() const noexcept { return instance_; }
  const TreeParams& params() const noexcept { return params_; }
  std::span<const DCNode> nodes() const noexcept { return nodes_; }
  const DCNode& node(std::size_t index) const { return nodes_.at(index); }
  const DCNode& root() const { return nodes_.front(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  int height() const noexcept { return height_; }

  /// Sub-instance of a node, rooms in ascending position order.
  ProblemInstance node_instance(std::size_t index) const;
  /// Room labels of a node in list order.
  std::vector<RoomId> node_room_ids(std::size_t index) const;
  std::int64_t node_capacity(std::size_t index) const;

 private:
  DCTree(ProblemInstance instance, TreeParams params)
      : instance_(std::move(instance)), params_(std::move(params)) {}

  friend DCTree build_tree(const ProblemInstance& instance, const TreeParams& params);

  ProblemInstance instance_;
  TreeParams params_;
  std::vector<DCNode> nodes_;
  int height_ = 0;
};

/// Sorts the rooms once at the root, then splits every node with more than
/// `min_size` rooms. Throws SplitInfeasibleError naming the parent vertex if
/// a child cannot cover its demand share.
DCTree build_tree(const ProblemInstance& instance, const TreeParams& params);

DCTree build_tree_headleft(const ProblemInstance& instance, const SortCriterion& sort,
                           const Rational& head_fraction, std::size_t min_size,
                           Rounding rounding = Rounding::kCeil);

DCTree build_tree_balanced(const ProblemInstance& instance, const SortCriterion& sort,
                           std::size_t min_size, Rounding rounding = Rounding::kCeil);

/// Leaves of the tree cut at height h: nodes at depth h plus shallower true
/// leaves, in pre-order. Throws Error(kOutOfRange) unless 0 <= h <= height.
std::vector<std::size_t> prune(const DCTree& tree, int h);

/// Graphviz digraph, one node per vertex labelled "D=<demand> |V|=<rooms>".
std::string to_dot(const DCTree& tree);

Rounding parse_rounding(std::string_view text);
const char* to_string(Rounding rounding);
TreeAlgorithm parse_tree_algorithm(std::string_view text);
const char* to_string(TreeAlgorithm algorithm);

}  // namespace dcknap
