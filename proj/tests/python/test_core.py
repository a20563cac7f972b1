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

import math

import numpy as np
import pytest

import sunflower as sf


def test_figure_instance():
    p = sf.make_params(3, 5, 8, seed=1)
    assert p.graph_vertex_count() == 128
    g = sf.Graph(p)
    s = g.s_label
    nbrs = [g.neighbor(s, k) for k in range(1, 4)]
    assert all(not g.is_sentinel(v) for v in nbrs)
    assert all(g.multiplicity(s, v) >= 1 for v in nbrs)
    assert g.is_sentinel(g.neighbor(s, 4))
    assert g.meters()["neighbor"] == 4


def test_invalid_params_raise_with_code():
    with pytest.raises(sf.SunflowerError) as info:
        sf.make_params(4, 5, 8)
    assert info.value.args[0] == "InvalidParams"


def test_spectrum_matches_numpy():
    p = sf.make_params(3, 5, 8)
    h = sf.effective_hamiltonian(p)
    assert h.shape == (40, 40)
    dense = np.linalg.eigvalsh(h)
    assert np.max(np.abs(np.array(sf.eigenvalues(p)) - dense)) < 1e-9
    assert abs(sf.start_overlap_sq(p) - 1 / 8) < 1e-15
    assert sf.spectral_gap(p) > 0


def test_filter_values():
    assert sf.eval_R(0.0, 7, 0.1) == 1.0
    assert abs(sf.eval_R(1.0, 1, 1 / math.sqrt(12)) + 11 / 13) < 1e-15
    assert sf.choose_degree(9.0, 9.0, 1e-3) == 19


def test_quantum_runs_find_paths():
    g = sf.Graph(sf.make_params(3, 5, 8, seed=7))
    runs = sf.run_quantum(g, trials=30, seed=3, workers=1)
    assert len(runs) == 30
    ok = [r for r in runs if r["success"]]
    assert len(ok) >= 15
    for r in ok:
        assert r["path"][0] == g.s_label and r["path"][-1] == g.t_label
        assert r["ledger"]["c_be"] == 9


def test_classical_and_expansion():
    rows = sf.classical_success(3, [8], trials=50, seed=1, workers=1)
    assert rows[0]["budget"] == 2 and rows[0]["successes"] == 0
    gap = sf.adjacency_gap(sf.Graph(sf.make_params(3, 5, 8)))
    assert abs(gap["lambda1"] - 3) < 1e-8
    rep = sf.bipartite_check(8, 3, 10)
    assert rep["cond_ii_exhaustive"]
