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
"""Divide-and-conquer analysis of the exam room covering knapsack."""

from ._dcknap import (
    Error,
    InfeasibleError,
    Tree,
    build_tree,
    critical_height,
    dp_solve,
    format_fixed,
    greedy_solve,
    l1_compare,
    lp_solve,
    make_realization,
    proctors_from_rate,
    run_experiment,
)

__all__ = [
    "Error",
    "InfeasibleError",
    "Tree",
    "build_tree",
    "critical_height",
    "dp_solve",
    "format_fixed",
    "greedy_solve",
    "l1_compare",
    "lp_solve",
    "make_realization",
    "proctors_from_rate",
    "run_experiment",
]
__version__ = "0.1.0"
