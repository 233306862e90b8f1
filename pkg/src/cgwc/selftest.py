"""Reduced-scale correctness checks runnable from an installed package.

The full-scale versions live in the test suite; these finish in seconds.
"""

from __future__ import annotations

import itertools
from typing import Callable

from . import iso
from .decomposition import GoodSeparation, find_good_separation, is_good_separation, verify_unbreakable
from .general import solve_cgwc
from .graph import INF, BoundariedGraph, ConnSpec, boundary_sum
from .mimick import cut_reduce, enumerate_family, size_bound
from .connectivity import component_profile
from .oracle import accepts, oracle_solve
from .recursive import solve_connected
from .septools import enumerate_connected_sets, universal_family

_VALS = (1, 2, 3, INF)


def _specs(t_max: int):
    for t in range(1, t_max + 1):
        for c in itertools.combinations_with_replacement(_VALS, t):
            yield ConnSpec(c)


def check_connected_solver() -> str:
    n_q = 0
    for g in iso.iter_graphs(4, (1, 2), connected=True):
        for spec in _specs(3):
            for k in range(4):
                o = oracle_solve(g, None, spec, k, kmax=3)
                s = solve_connected(g, spec, k)
                assert (o is None) == (s is None), (g, spec, k)
                assert s is None or accepts(g, None, spec, k, s.edges)
                n_q += 1
    return f"{n_q} queries"


def check_general_solver() -> str:
    n_q = 0
    for g in iso.iter_graphs(4, (1, 2), n_min=2, connected=False):
        for spec in _specs(4):
            for k in range(4):
                o = oracle_solve(g, None, spec, k, kmax=3)
                s = solve_cgwc(g, spec, k)
                assert (o is None) == (s is None), (g, spec, k)
                assert s is None or accepts(g, None, spec, k, s.edges)
                n_q += 1
    return f"{n_q} queries"


def _profile(g):
    return sorted(c for _, c in component_profile(g))


def check_cut_reduce() -> str:
    n_q = 0
    for n in range(1, 5):
        for h_g in iso.weighted_graphs(n, (1, 2)):
            for r in (1, 2):
                for x in iso.boundary_tuples(h_g, r):
                    h = BoundariedGraph(h_g, x)
                    for p in (1, 2, INF):
                        red = cut_reduce(h, p)
                        assert red.graph.n <= max(size_bound(r), r)
                        for m in enumerate_family(r, 1):
                            a = boundary_sum(m, h)
                            b = boundary_sum(m, red)
                            if not a.is_connected():
                                continue
                            pa, pb = _profile(a), _profile(b)
                            assert min(pa[0], p) == min(pb[0], p), (h, p, m)
                            n_q += 1
    return f"{n_q} gluings"


def check_family() -> str:
    assert len(enumerate_family(0, 3)) == 1
    assert len(enumerate_family(1, 1)) == 4
    return "H_0 and H_{1,1} sizes"


def check_good_separation() -> str:
    n_q = 0
    for g in iso.iter_graphs(6, (1,), connected=True):
        for q in (1, 2):
            for p in (1, 2):
                v = find_good_separation(g, q, p)
                if isinstance(v, GoodSeparation):
                    assert is_good_separation(g, v.a, v.b, q, p)
                else:
                    assert verify_unbreakable(g, v.q_out, v.p)
                n_q += 1
    return f"{n_q} verdicts"


def check_universal_family() -> str:
    for n in range(0, 8):
        for a in range(min(n, 2) + 1):
            for b in range(min(n, 2) + 1):
                assert universal_family(n, a, b).verify(), (n, a, b)
    return "n <= 7"


def check_connected_sets() -> str:
    from math import comb

    n_q = 0
    for g in iso.iter_graphs(5, (1,), connected=True):
        for b in range(1, 4):
            for f in range(3):
                got = enumerate_connected_sets(g, 0, b, f)
                assert len(got) <= comb(b + f, b)
                n_q += 1
    return f"{n_q} cases"


def check_fixtures() -> str:
    from .cli import _load, fixture_names

    for name in fixture_names():
        inst = _load("fixture:" + name)
        o = oracle_solve(inst.graph, None, inst.spec, inst.k)
        s = solve_cgwc(inst.graph, inst.spec, inst.k)
        assert (o is None) == (s is None), name
    return f"{len(fixture_names())} fixtures"


CHECKS: dict[str, Callable[[], str]] = {
    "fixtures": check_fixtures,
    "connected_solver": check_connected_solver,
    "general_solver": check_general_solver,
    "cut_reduce": check_cut_reduce,
    "family": check_family,
    "good_separation": check_good_separation,
    "universal_family": check_universal_family,
    "connected_sets": check_connected_sets,
}


def run_selftest() -> list[dict]:
    out = []
    for name, fn in CHECKS.items():
        try:
            detail = fn()
            out.append({"name": name, "passed": True, "detail": detail})
        except AssertionError as e:
            out.append({"name": name, "passed": False, "detail": f"counterexample: {e}"})
    return out
