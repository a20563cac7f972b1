# Copyright 2026 The Sunflower Pathfinding Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Sunflower graph pathfinding: graph oracles, symmetric-subspace spectra,
eigenstate filtering and the quantum / classical query experiments."""

from ._core import (  # noqa: F401
    Graph,
    GraphParams,
    SunflowerError,
    adjacency_gap,
    bipartite_check,
    choose_degree,
    classical_success,
    effective_hamiltonian,
    eigenvalues,
    eval_R,
    h1_determinant,
    make_params,
    robustness_bound,
    run_quantum,
    spectral_gap,
    start_overlap_sq,
    wilson_interval,
)

__version__ = "0.1.0"
