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


#include "dcknap/dctree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dcknap/error.hpp"

namespace dcknap {

DemandSplit split_demand(std::int64_t parent_demand, std::int64_t left_caps,
                         std::int64_t total_caps, Rounding rounding) {
  if (left_caps <= 0 || left_caps >= total_caps) {
    throw Error(ErrorKind::kInvalidPartition,
                "degenerate partition: left capacity " + std::to_string(left_caps) +
                    " of total " + std::to_string(total_caps));
  }
  if (parent_demand < 0 || parent_demand > total_caps) {
    throw Error(ErrorKind::kInvalidParameter,
                "parent demand " + std::to_string(parent_demand) + " outside [0, " +
                    std::to_string(total_caps) + "]");
  }
  const std::int64_t scaled = parent_demand * left_caps;
  const std::int64_t left =
      rounding == Rounding::kCeil ? (scaled + total_caps - 1) / total_caps : scaled / total_caps;
  return {left, parent_demand - left};
}

bool pair_feasible(std::int64_t left_caps, std::int64_t right_caps, std::int64_t left_demand,
                   std::int64_t right_demand) {
  return left_demand <= left_caps && right_demand <= right_caps;
}

bool slack_condition_holds(std::int64_t total_caps, std::int64_t right_caps,
                           std::int64_t demand) {
  if (right_caps < 1) return false;
  return demand * right_caps <= (right_caps - 1) * total_caps;
}

ProblemInstance DCTree::node_instance(std::size_t index) const {
  std::vector<std::size_t> positions = node(index).rooms;
  std::sort(positions.begin(), positions.end());
  return instance_.subset(positions, node(index).demand);
}

std::vector<RoomId> DCTree::node_room_ids(std::size_t index) const {
  std::vector<RoomId> ids;
  for (std::size_t pos : node(index).rooms) ids.push_back(instance_.room_ids()[pos]);
  return ids;
}

std::int64_t DCTree::node_capacity(std::size_t index) const {
  std::int64_t total = 0;
  for (std::size_t pos : node(index).rooms) total += instance_.capacities()[pos];
  return total;
}

DCTree build_tree(const ProblemInstance& instance, const TreeParams& params) {
  instance.require_feasible("tree generation");
  if (params.min_size < 1) {
    throw Error(ErrorKind::kInvalidParameter, "minimum list size must be at least 1");
  }
  if (params.algorithm == TreeAlgorithm::kHeadLeft &&
      (params.head_fraction < Rational(0) || params.head_fraction > Rational(1))) {
    throw Error(ErrorKind::kInvalidParameter,
                "head fraction must lie in [0, 1], got " + params.head_fraction.to_string());
  }

  DCTree tree(instance, params);
  auto caps = instance.capacities();
  auto sum_caps = [&](const std::vector<std::size_t>& rooms) {
    std::int64_t total = 0;
    for (std::size_t pos : rooms) total += caps[pos];
    return total;
  };

  std::function<std::size_t(std::vector<std::size_t>, std::int64_t, int, std::optional<std::size_t>)>
      branch = [&](std::vector<std::size_t> rooms, std::int64_t demand, int height,
                   std::optional<std::size_t> parent) -> std::size_t {
    const std::size_t index = tree.nodes_.size();
    tree.nodes_.push_back(DCNode{rooms, demand, height, parent, std::nullopt, std::nullopt});
    tree.height_ = std::max(tree.height_, height);
    if (rooms.size() <= params.min_size) return index;

    std::vector<std::size_t> left_rooms;
    std::vector<std::size_t> right_rooms;
    if (params.algorithm == TreeAlgorithm::kHeadLeft) {
      const auto head =
          static_cast<std::size_t>((params.head_fraction * Rational(static_cast<std::int64_t>(rooms.size()))).floor());
      if (head == 0 || head >= rooms.size()) return index;
      left_rooms.assign(rooms.begin(), rooms.begin() + static_cast<std::ptrdiff_t>(head));
      right_rooms.assign(rooms.begin() + static_cast<std::ptrdiff_t>(head), rooms.end());
    } else {
      for (std::size_t i = 0; i < rooms.size(); ++i) {
        (i % 2 == 0 ? left_rooms : right_rooms).push_back(rooms[i]);
      }
    }

    const std::int64_t left_caps = sum_caps(left_rooms);
    const std::int64_t right_caps = sum_caps(right_rooms);
    const DemandSplit split = split_demand(demand, left_caps, left_caps + right_caps, params.rounding);
    if (!pair_feasible(left_caps, right_caps, split.left, split.right)) {
      throw SplitInfeasibleError(
          index, "vertex " + std::to_string(index) + ": split demands (" +
                     std::to_string(split.left) + ", " + std::to_string(split.right) +
                     ") exceed child capacities (" + std::to_string(left_caps) + ", " +
                     std::to_string(right_caps) + ")");
    }
    const std::size_t left = branch(std::move(left_rooms), split.left, height + 1, index);
    const std::size_t right = branch(std::move(right_rooms), split.right, height + 1, index);
    tree.nodes_[index].left = left;
    tree.nodes_[index].right = right;
    return index;
  };

  branch(sort_rooms(instance, params.sort), instance.demand(), 0, std::nullopt);
  return tree;
}

DCTree build_tree_headleft(const ProblemInstance& instance, const SortCriterion& sort,
                           const Rational& head_fraction, std::size_t min_size,
                           Rounding rounding) {
  TreeParams params;
  params.algorithm = TreeAlgorithm::kHeadLeft;
  params.sort = sort;
  params.head_fraction = head_fraction;
  params.min_size = min_size;
  params.rounding = rounding;
  return build_tree(instance, params);
}

DCTree build_tree_balanced(const ProblemInstance& instance, const SortCriterion& sort,
                           std::size_t min_size, Rounding rounding) {
  TreeParams params;
  params.algorithm = TreeAlgorithm::kBalanced;
  params.sort = sort;
  params.min_size = min_size;
  params.rounding = rounding;
  return build_tree(instance, params);
}

std::vector<std::size_t> prune(const DCTree& tree, int h) {
  if (h < 0 || h > tree.height()) {
    throw Error(ErrorKind::kOutOfRange, "prune height " + std::to_string(h) + " outside [0, " +
                                            std::to_string(tree.height()) + "]");
  }
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const DCNode& node = tree.node(i);
    if (node.height == h || (node.height < h && node.is_leaf())) leaves.push_back(i);
  }
  return leaves;
}

std::string to_dot(const DCTree& tree) {
  std::ostringstream out;
  out << "digraph dctree {\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const DCNode& node = tree.node(i);
    out << "  v" << i << " [label=\"D=" << node.demand << " |V|=" << node.rooms.size()
        << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const DCNode& node = tree.node(i);
    if (node.left) out << "  v" << i << " -> v" << *node.left << ";\n";
    if (node.right) out << "  v" << i << " -> v" << *node.right << ";\n";
  }
  out << "}\n";
  return out.str();
}

Rounding parse_rounding(std::string_view text) {
  if (text == "ceil") return Rounding::kCeil;
  if (text == "floor") return Rounding::kFloor;
  throw Error(ErrorKind::kInvalidParameter, "unknown rounding '" + std::string(text) + "'");
}

const char* to_string(Rounding rounding) {
  return rounding == Rounding::kCeil ? "ceil" : "floor";
}

TreeAlgorithm parse_tree_algorithm(std::string_view text) {
  if (text == "hlT" || text == "hlt" || text == "headleft" || text == "head-left") {
    return TreeAlgorithm::kHeadLeft;
  }
  if (text == "blT" || text == "blt" || text == "balanced") return TreeAlgorithm::kBalanced;
  throw Error(ErrorKind::kInvalidParameter, "unknown tree algorithm '" + std::string(text) + "'");
}

const char* to_string(TreeAlgorithm algorithm) {
  return algorithm == TreeAlgorithm::kHeadLeft ? "hlT" : "blT";
}

}  // namespace dcknap
