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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dcknap/dctree.hpp"
#include "dcknap/error.hpp"
#include "dcknap/io.hpp"
#include "dcknap/metrics.hpp"
#include "dcknap/model.hpp"
#include "dcknap/montecarlo.hpp"
#include "dcknap/rational.hpp"
#include "dcknap/solvers.hpp"

namespace py = pybind11;
using namespace dcknap;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  auto big = [](const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
  };
  return fraction(big(r.numerator()), big(r.denominator()));
}

// Accepts str ("0.9", "9/10"), int, float (read as its shortest decimal) or Fraction.
Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return Rational::parse(value.cast<std::string>());
  if (py::isinstance<py::bool_>(value)) throw Error(ErrorKind::kInvalidParameter, "bool is not a number");
  if (py::isinstance<py::int_>(value)) return Rational(value.cast<std::int64_t>());
  if (py::isinstance<py::float_>(value)) return Rational::from_decimal(value.cast<double>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    return Rational(value.attr("numerator").cast<std::int64_t>(),
                    value.attr("denominator").cast<std::int64_t>());
  }
  throw Error(ErrorKind::kInvalidParameter, "expected a number or numeric string");
}

ProblemInstance make_instance(std::vector<std::int64_t> capacities, std::int64_t demand,
                              std::optional<std::int64_t> rate,
                              std::optional<std::vector<std::int64_t>> proctors) {
  if (proctors && rate) throw Error(ErrorKind::kInvalidParameter, "give rate or proctors, not both");
  if (proctors) return ProblemInstance(std::move(capacities), std::move(*proctors), demand);
  return ProblemInstance::from_rate(std::move(capacities), rate.value_or(54), demand);
}

std::vector<RoomId> chosen_ids(const ProblemInstance& inst, const Selection& s) {
  std::vector<RoomId> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) out.push_back(inst.room_ids()[i]);
  }
  return out;
}

py::dict solve_result(const ProblemInstance& inst, const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["rooms"] = chosen_ids(inst, r.selection);
  return d;
}

py::dict lp_result(const ProblemInstance& inst, const LpRelaxation& lp) {
  py::dict d;
  d["value"] = to_fraction(lp.value);
  py::list x;
  for (const Rational& v : lp.solution) x.append(to_fraction(v));
  d["solution"] = x;
  const auto room = lp.fractional_room(inst);
  d["fractional_room"] = room ? py::cast(*room) : py::none();
  return d;
}

py::dict efficiency_dict(const EfficiencySeries& s) {
  py::dict d;
  for (Metric m : kAllMetrics) {
    py::list col;
    for (int h = 0; h <= s.height(); ++h) {
      if (is_stepwise(m) && h == 0) {
        col.append(py::none());
      } else {
        col.append(to_fraction(s.value(m, h)));
      }
    }
    d[to_string(m)] = col;
  }
  return d;
}

py::dict averaged_dict(const AveragedSeries& s) {
  py::dict d;
  for (Metric m : kAllMetrics) d[to_string(m)] = s.column(m);
  return d;
}

ExperimentParams experiment_params(const py::kwargs& kw) {
  ExperimentParams p;
  bool fraction_given = false;
  for (const auto& [key_handle, value] : kw) {
    const std::string key = key_handle.cast<std::string>();
    if (key == "n_rooms") p.n_rooms = value.cast<std::size_t>();
    else if (key == "dist") p.dist = parse_distribution(value.cast<std::string>());
    else if (key == "occupancy") p.occupancy = to_rational(value);
    else if (key == "rate") p.rate = value.cast<std::int64_t>();
    else if (key == "tree") p.tree_alg = parse_tree_algorithm(value.cast<std::string>());
    else if (key == "sort") p.sort = parse_sort_key(value.cast<std::string>());
    else if (key == "fraction") {
      fraction_given = !value.is_none();
      if (fraction_given) p.head_fraction = to_rational(value);
    } else if (key == "min_size") p.min_size = value.cast<std::size_t>();
    else if (key == "rounding") p.rounding = parse_rounding(value.cast<std::string>());
    else if (key == "realizations") p.realizations = value.cast<std::size_t>();
    else if (key == "seed") p.master_seed = value.cast<std::uint64_t>();
    else throw Error(ErrorKind::kInvalidParameter, "unknown experiment parameter: " + key);
  }
  if (p.tree_alg == TreeAlgorithm::kBalanced && !fraction_given) p.head_fraction.reset();
  p.validate();
  return p;
}

class PyTree {
 public:
  explicit PyTree(DCTree tree) : tree_(std::move(tree)) {}

  int height() const { return tree_.height(); }
  std::size_t size() const { return tree_.size(); }

  py::list nodes() const {
    py::list out;
    for (std::size_t i = 0; i < tree_.size(); ++i) {
      const DCNode& n = tree_.node(i);
      py::dict d;
      d["rooms"] = tree_.node_room_ids(i);
      d["demand"] = n.demand;
      d["capacity"] = tree_.node_capacity(i);
      d["height"] = n.height;
      d["parent"] = n.parent ? py::cast(*n.parent) : py::none();
      d["left"] = n.left ? py::cast(*n.left) : py::none();
      d["right"] = n.right ? py::cast(*n.right) : py::none();
      out.append(d);
    }
    return out;
  }

  std::vector<std::size_t> prune(int h) const { return dcknap::prune(tree_, h); }
  std::string dot() const { return to_dot(tree_); }
  std::string membership_csv() const { return membership_table_csv(tree_); }
  py::dict efficiency() const { return efficiency_dict(solve_tree(tree_)); }
  std::string efficiency_csv() const { return efficiency_table_csv(solve_tree(tree_)); }

 private:
  DCTree tree_;
};

}  // namespace

PYBIND11_MODULE(_dcknap, m) {
  m.doc() = "Divide-and-conquer analysis of the exam room covering knapsack";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<InfeasibleError> infeasible(m, "InfeasibleError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InfeasibleError& e) {
      py::set_error(infeasible, e.what());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kInfeasible) {
        py::set_error(infeasible, e.what());
      } else {
        py::set_error(error, e.what());
      }
    }
  });

  m.def(
      "greedy_solve",
      [](std::vector<std::int64_t> caps, std::int64_t demand, std::optional<std::int64_t> rate,
         std::optional<std::vector<std::int64_t>> proctors) {
        const ProblemInstance inst = make_instance(std::move(caps), demand, rate, std::move(proctors));
        return solve_result(inst, greedy_solve(inst));
      },
      py::arg("capacities"), py::arg("demand"), py::arg("rate") = py::none(),
      py::arg("proctors") = py::none());

  m.def(
      "dp_solve",
      [](std::vector<std::int64_t> caps, std::int64_t demand, std::optional<std::int64_t> rate,
         std::optional<std::vector<std::int64_t>> proctors) {
        const ProblemInstance inst = make_instance(std::move(caps), demand, rate, std::move(proctors));
        return solve_result(inst, dp_solve(inst));
      },
      py::arg("capacities"), py::arg("demand"), py::arg("rate") = py::none(),
      py::arg("proctors") = py::none());

  m.def(
      "lp_solve",
      [](std::vector<std::int64_t> caps, std::int64_t demand, std::optional<std::int64_t> rate,
         std::optional<std::vector<std::int64_t>> proctors) {
        const ProblemInstance inst = make_instance(std::move(caps), demand, rate, std::move(proctors));
        return lp_result(inst, lp_relax_solve(inst));
      },
      py::arg("capacities"), py::arg("demand"), py::arg("rate") = py::none(),
      py::arg("proctors") = py::none());

  m.def(
      "proctors_from_rate",
      [](const std::vector<std::int64_t>& caps, std::int64_t rate) {
        return proctors_from_rate(caps, rate);
      },
      py::arg("capacities"), py::arg("rate"));

  py::class_<PyTree>(m, "Tree")
      .def_property_readonly("height", &PyTree::height)
      .def("__len__", &PyTree::size)
      .def("nodes", &PyTree::nodes, "Nodes in pre-order as dicts")
      .def("prune", &PyTree::prune, py::arg("h"), "Node indices of the tree cut at height h")
      .def("dot", &PyTree::dot)
      .def("membership_csv", &PyTree::membership_csv)
      .def("efficiency", &PyTree::efficiency, "Exact per-height metrics keyed by name")
      .def("efficiency_csv", &PyTree::efficiency_csv);

  m.def(
      "build_tree",
      [](std::vector<std::int64_t> caps, std::int64_t demand, std::int64_t rate,
         const std::string& tree, const std::string& sort, const py::object& fraction,
         std::size_t min_size, const std::string& rounding, std::uint64_t seed, bool ascending) {
        TreeParams params;
        params.algorithm = parse_tree_algorithm(tree);
        params.sort = {parse_sort_key(sort), !ascending, seed};
        params.min_size = min_size;
        params.rounding = parse_rounding(rounding);
        if (!fraction.is_none()) {
          if (params.algorithm == TreeAlgorithm::kBalanced) {
            throw Error(ErrorKind::kInvalidParameter, "blT takes no head fraction");
          }
          params.head_fraction = to_rational(fraction);
        }
        return PyTree(dcknap::build_tree(ProblemInstance::from_rate(std::move(caps), rate, demand), params));
      },
      py::arg("capacities"), py::arg("demand"), py::arg("rate") = 54, py::arg("tree") = "hlT",
      py::arg("sort") = "gamma", py::arg("fraction") = py::none(), py::arg("min_size") = 4,
      py::arg("rounding") = "ceil", py::arg("seed") = 0, py::arg("ascending") = false);

  m.def(
      "make_realization",
      [](std::size_t n, const std::string& dist, const py::object& occupancy, std::uint64_t seed) {
        const Realization r = make_realization(parse_distribution(dist), n, to_rational(occupancy), seed);
        py::dict d;
        d["capacities"] = r.capacities;
        d["demand"] = r.demand;
        d["seed"] = r.seed;
        return d;
      },
      py::arg("n") = 512, py::arg("dist") = "uniform", py::arg("occupancy") = "0.9",
      py::arg("seed") = 2020);

  m.def(
      "run_experiment",
      [](unsigned workers, const py::kwargs& kw) {
        const ExperimentParams p = experiment_params(kw);
        ExperimentResult r;
        {
          py::gil_scoped_release release;
          r = run_experiment(p, workers);
        }
        py::dict d;
        d["average"] = averaged_dict(r.average);
        d["realizations"] = r.average.realizations;
        d["resampled"] = r.resampled;
        d["height"] = r.average.height();
        return d;
      },
      py::arg("workers") = 1,
      "Averaged metrics over a batch. Keywords: n_rooms, dist, occupancy, rate, tree, "
      "sort, fraction, min_size, rounding, realizations, seed.");

  m.def(
      "critical_height",
      [](const std::vector<std::vector<double>>& columns, const std::string& aggregation) {
        return critical_height(columns, parse_aggregation(aggregation));
      },
      py::arg("columns"), py::arg("aggregation") = "mean");

  m.def(
      "l1_compare",
      [](const std::vector<double>& first, const std::vector<double>& second) {
        const L1Comparison c = l1_compare(first, second);
        const char* winner = c.winner == Winner::kFirst ? "first"
                             : c.winner == Winner::kSecond ? "second"
                                                           : "tie";
        return py::make_tuple(c.norm_first, c.norm_second, winner);
      },
      py::arg("first"), py::arg("second"));

  m.def("format_fixed", &format_fixed, py::arg("value"), py::arg("decimals") = 2);
}
