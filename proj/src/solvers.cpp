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


#include "dcknap/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dcknap/error.hpp"
#include "dcknap/random.hpp"

namespace dcknap {

namespace {

// One bit per (item, budget) cell of the knapsack table.
class BitTable {
 public:
  BitTable(std::size_t rows, std::size_t cols)
      : words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

  void set(std::size_t row, std::size_t col) {
    bits_[row * words_per_row_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool get(std::size_t row, std::size_t col) const {
    return (bits_[row * words_per_row_ + col / 64] >> (col % 64)) & 1U;
  }

 private:
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

SolveResult greedy_solve(const ProblemInstance& instance) {
  instance.require_feasible("greedy");
  SolveResult out{Selection(instance.size()), 0};
  std::int64_t covered = 0;
  for (std::size_t pos : specific_weight_order(instance)) {
    if (covered >= instance.demand()) break;
    out.selection.set(pos);
    covered += instance.capacities()[pos];
    out.value += instance.proctors()[pos];
  }
  return out;
}

SolveResult dp_solve(const ProblemInstance& instance) {
  const StandardKnapsack knapsack = to_standard_knapsack(instance);
  const std::size_t n = knapsack.items.size();
  const auto budget = static_cast<std::size_t>(knapsack.budget);

  // Suffix DP: best[b] = max profit packing items i..n-1 into capacity b.
  // take(i, b) records that item i is packed in some optimum of (i, b); on
  // ties it is always packed, which yields the lexicographically largest
  // packing and therefore the lexicographically smallest cover.
  std::vector<std::int64_t> best(budget + 1, 0);
  BitTable take(n, budget + 1);
  for (std::size_t i = n; i-- > 0;) {
    const auto w = static_cast<std::size_t>(knapsack.items[i].weight);
    const std::int64_t p = knapsack.items[i].profit;
    if (w > budget) continue;
    for (std::size_t b = budget; b >= w; --b) {
      const std::int64_t with_item = best[b - w] + p;
      if (with_item >= best[b]) {
        best[b] = with_item;
        take.set(i, b);
      }
    }
  }

  Selection packed(n);
  std::size_t remaining = budget;
  for (std::size_t i = 0; i < n; ++i) {
    if (take.get(i, remaining)) {
      packed.set(i);
      remaining -= static_cast<std::size_t>(knapsack.items[i].weight);
    }
  }
  Selection cover = packed.complement();
  return {cover, instance.total_proctors() - best[budget]};
}

LpRelaxation lp_relax_solve(const ProblemInstance& instance) {
  instance.require_feasible("lp relaxation");
  LpRelaxation out;
  out.solution.assign(instance.size(), Rational(0));
  std::int64_t whole_proctors = 0;
  std::int64_t residual = instance.demand();
  for (std::size_t pos : specific_weight_order(instance)) {
    if (residual <= 0) break;
    const std::int64_t c = instance.capacities()[pos];
    if (c <= residual) {
      out.solution[pos] = Rational(1);
      whole_proctors += instance.proctors()[pos];
      residual -= c;
    } else {
      out.solution[pos] = Rational(residual, c);
      out.fractional_position = pos;
      out.value = Rational(instance.proctors()[pos] * residual, c);
      residual = 0;
    }
  }
  out.value += Rational(whole_proctors);
  return out;
}

Selection associated_integer_solution(std::span<const Rational> lp_solution) {
  Selection out(lp_solution.size());
  for (std::size_t i = 0; i < lp_solution.size(); ++i) {
    if (lp_solution[i].sign() > 0) out.set(i);
  }
  return out;
}

SolveResult brute_force_solve(const ProblemInstance& instance) {
  if (instance.size() > kBruteForceMaxRooms) {
    throw Error(ErrorKind::kSizeLimit, "brute force limited to " +
                                           std::to_string(kBruteForceMaxRooms) + " rooms, got " +
                                           std::to_string(instance.size()));
  }
  instance.require_feasible("brute force");
  const std::size_t n = instance.size();
  std::optional<SolveResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t load = 0;
    std::int64_t value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        load += instance.capacities()[i];
        value += instance.proctors()[i];
      }
    }
    if (load < instance.demand()) continue;
    if (best && value > best->value) continue;
    Selection candidate(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) candidate.set(i);
    }
    if (!best || value < best->value || candidate < best->selection) {
      best = SolveResult{std::move(candidate), value};
    }
  }
  return *best;
}

SolutionTriple solve_triple(const ProblemInstance& instance) {
  SolutionTriple out;
  LpRelaxation lp = lp_relax_solve(instance);
  SolveResult exact = dp_solve(instance);
  SolveResult greedy = greedy_solve(instance);
  out.lrs = lp.value;
  out.dps = exact.value;
  out.gas = greedy.value;
  out.exact_selection = std::move(exact.selection);
  out.greedy_selection = std::move(greedy.selection);
  if (!(out.lrs <= Rational(out.dps) && out.dps <= out.gas)) {
    throw Error(ErrorKind::kInvalidInput,
                "bound sandwich violated: lrs=" + out.lrs.to_string() +
                    " dps=" + std::to_string(out.dps) + " gas=" + std::to_string(out.gas));
  }
  return out;
}

std::vector<std::size_t> sort_rooms(const ProblemInstance& instance,
                                    const SortCriterion& criterion) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto c = instance.capacities();
  auto p = instance.proctors();
  const bool desc = criterion.descending;
  switch (criterion.key) {
    case SortKey::kProctors:
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return desc ? p[a] > p[b] : p[a] < p[b];
      });
      break;
    case SortKey::kCapacity:
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return desc ? c[a] > c[b] : c[a] < c[b];
      });
      break;
    case SortKey::kSpecificWeight:
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return desc ? c[a] * p[b] > c[b] * p[a] : c[a] * p[b] < c[b] * p[a];
      });
      break;
    case SortKey::kRandom: {
      Rng rng(criterion.seed);
      rng.shuffle(order);
      break;
    }
  }
  return order;
}

SortKey parse_sort_key(std::string_view text) {
  if (text == "p" || text == "proctors") return SortKey::kProctors;
  if (text == "c" || text == "capacity") return SortKey::kCapacity;
  if (text == "gamma" || text == "g" || text == "specific_weight") return SortKey::kSpecificWeight;
  if (text == "random") return SortKey::kRandom;
  throw Error(ErrorKind::kInvalidParameter, "unknown sort criterion '" + std::string(text) + "'");
}

const char* to_string(SortKey key) {
  switch (key) {
    case SortKey::kProctors: return "p";
    case SortKey::kCapacity: return "c";
    case SortKey::kSpecificWeight: return "gamma";
    case SortKey::kRandom: return "random";
  }
  return "?";
}

}  // namespace dcknap
