"""Compiled kernels and their interpreted twins must agree."""

import numpy as np
from hypothesis import given

from cgwc import kernels
from cgwc.graph import WeightedGraph

from conftest import weighted_graphs


def _mat(g):
    return np.ascontiguousarray(g.matrix)


@given(weighted_graphs(min_n=1, max_n=8, connected=True))
def test_stoer_wagner_twins(g):
    a = kernels.stoer_wagner(_mat(g))
    b = kernels.stoer_wagner.py_func(_mat(g))
    assert a[0] == b[0] and np.array_equal(a[1], b[1])


@given(weighted_graphs(min_n=2, max_n=7))
def test_max_flow_twins(g):
    cap = _mat(g).copy()
    a = kernels.max_flow(cap, 0, g.n - 1)
    b = kernels.max_flow.py_func(cap, 0, g.n - 1)
    assert a[0] == b[0] and np.array_equal(a[1], b[1])


@given(weighted_graphs(min_n=1, max_n=6))
def test_deletion_profiles_twins(g):
    eu, ev, ew = g.edge_arrays
    a = kernels.deletion_profiles(_mat(g), eu, ev, ew, 3, 3)
    b = kernels.deletion_profiles.py_func(_mat(g), eu, ev, ew, 3, 3)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


@given(weighted_graphs(min_n=2, max_n=6, connected=True))
def test_enumerate_bonds_twins(g):
    eu, ev, ew = g.edge_arrays
    a = kernels.enumerate_bonds(_mat(g), eu, ev, ew, 3)
    b = kernels.enumerate_bonds.py_func(_mat(g), eu, ev, ew, 3)
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def test_component_labels():
    g = WeightedGraph.from_edges(5, [(0, 2), (3, 4)])
    lab, c = kernels.component_labels(_mat(g))
    assert c == 3
    assert lab[0] == lab[2] and lab[3] == lab[4] and len({lab[0], lab[1], lab[3]}) == 3


def test_disabled_jit_runs_interpreted():
    import json
    import os
    import subprocess
    import sys

    code = ("import json; from cgwc._jit import backend; from cgwc.cli import run_command; "
            "out, rc = run_command(['solve', 'fixture:weighted_three_parts']); "
            "print(json.dumps([backend(), rc, json.loads(out)['answer']]))")
    env = dict(os.environ, CGWC_DISABLE_JIT="1")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert json.loads(res.stdout) == ["python", 0, "YES"]
