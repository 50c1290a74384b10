# Copyright 2026 The flift Authors
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

"""Factored lifts of combined voltage graphs and their spectra."""

import json as _json

from flift._core import (
    BaseGraph,
    NumericalError,
    ParseError,
    ValidationError,
    associated_matrix,
    build_lift,
    builtin_names,
    check_translation_action,
    compare_multisets,
    direct_spectrum,
    evaluate_matrix,
    full_spectrum,
    load_base_graph,
    ordinary_matrix,
    parse_base_graph,
    resolve_input,
    table,
    token_graph_cycle,
    translation_map,
)
from flift._core import random_sweep as _random_sweep


def random_sweep(seed=1, trials=100, max_m=12, max_n=5, tol=1e-6):
    """Randomized comparison of the B(z) route against the direct oracle."""
    return _json.loads(_random_sweep(seed, trials, max_m, max_n, tol))


__all__ = [
    "BaseGraph",
    "NumericalError",
    "ParseError",
    "ValidationError",
    "associated_matrix",
    "build_lift",
    "builtin_names",
    "check_translation_action",
    "compare_multisets",
    "direct_spectrum",
    "evaluate_matrix",
    "full_spectrum",
    "load_base_graph",
    "ordinary_matrix",
    "parse_base_graph",
    "random_sweep",
    "resolve_input",
    "table",
    "token_graph_cycle",
    "translation_map",
]
