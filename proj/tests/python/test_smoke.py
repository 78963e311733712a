# Copyright 2026 The dcknap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

import dcknap

ROOMS_R1 = [113, 54, 95, 89, 85, 87, 76, 105]
DEMAND_R1 = 633


def brute_force(caps, procs, demand):
    best = None
    for bits in product((0, 1), repeat=len(caps)):
        if sum(c for c, b in zip(caps, bits) if b) >= demand:
            v = sum(p for p, b in zip(procs, bits) if b)
            best = v if best is None else min(best, v)
    return best


def test_first_realization_solutions():
    lp = dcknap.lp_solve(ROOMS_R1, DEMAND_R1, rate=54)
    assert lp["value"] == Fraction(1595, 113)
    assert dcknap.format_fixed(float(lp["value"])) == "14.12"
    assert lp["fractional_room"] == 0
    assert dcknap.dp_solve(ROOMS_R1, DEMAND_R1, rate=54)["value"] == 15
    assert dcknap.greedy_solve(ROOMS_R1, DEMAND_R1, rate=54)["value"] == 16


def test_dp_matches_enumeration():
    caps = [5, 9, 4, 7, 3]
    procs = [2, 3, 1, 3, 2]
    for demand in range(1, sum(caps) + 1):
        got = dcknap.dp_solve(caps, demand, proctors=procs)["value"]
        assert got == brute_force(caps, procs, demand)


def test_proctors_round_up():
    assert dcknap.proctors_from_rate([113, 54, 108], 54) == [3, 1, 2]


def test_head_left_tree_demands():
    tree = dcknap.build_tree(ROOMS_R1, DEMAND_R1, rate=54, tree="hlT", fraction="1/2", min_size=2)
    assert tree.height == 2
    assert [n["demand"] for n in tree.nodes()] == [633, 309, 144, 165, 324, 155, 169]
    assert tree.nodes()[1]["rooms"] == [1, 7, 2, 3]
    assert tree.prune(1) == [1, 4]
    assert tree.dot().startswith("digraph")
    eff = tree.efficiency()
    assert [float(x) for x in eff["DPS"]] == [15.0, 16.0, 16.0]
    assert eff["GbE_DPS"][1] == Fraction(20, 3)
    assert eff["SwE_DPS"][0] is None


def test_golden_membership_table():
    data = Path(os.environ.get("DCKNAP_TEST_DATA_DIR", Path(__file__).parents[1] / "data"))
    tree = dcknap.build_tree(ROOMS_R1, DEMAND_R1, fraction=0.5, min_size=2)
    assert tree.membership_csv() == (data / "hlt_r1_membership.csv").read_text()


def test_errors():
    with pytest.raises(dcknap.InfeasibleError):
        dcknap.dp_solve([40, 50], 120, rate=54)
    with pytest.raises(dcknap.Error):
        dcknap.build_tree(ROOMS_R1, DEMAND_R1, tree="blT", fraction=0.5)
    with pytest.raises(ValueError):
        dcknap.run_experiment(n_rooms=8, colour="red")


def test_experiment_is_deterministic():
    kw = dict(n_rooms=32, realizations=4, seed=3)
    a = dcknap.run_experiment(workers=1, **kw)
    b = dcknap.run_experiment(workers=3, **kw)
    assert a == b
    col = a["average"]["GbE_DPS"]
    assert col[0] == 0.0
    assert len(col) == a["height"] + 1


def test_realization_and_helpers():
    r = dcknap.make_realization(64, "uniform", "0.9", seed=11)
    assert len(r["capacities"]) == 64
    assert r["demand"] == (9 * sum(r["capacities"])) // 10
    assert dcknap.make_realization(64, "uniform", 0.9, seed=11) == r
    assert dcknap.critical_height([[0, 1, 2, 3, 10]]) == 4
    assert dcknap.l1_compare([26.45], [3.81])[2] == "second"
