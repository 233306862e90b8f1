import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from cgwc import iso
from cgwc.graph import WeightedGraph
from cgwc.septools import (
    bfs_bound,
    connected_sets_upto,
    enumerate_connected_sets,
    restricted_bfs,
    universal_family,
)

from conftest import weighted_graphs


def test_universal_family_edge_cases():
    assert frozenset() in universal_family(5, 0, 3).sets
    assert frozenset(range(5)) in universal_family(5, 3, 0).sets


def test_universal_family_singletons():
    fam = universal_family(4, 1, 1)
    for a, b in itertools.permutations(range(4), 2):
        assert fam.covers({a}, {b})
    assert fam.verify()


@pytest.mark.parametrize("n", range(0, 9))
def test_universal_family_small(n):
    for a in range(min(n, 2) + 1):
        for b in range(min(n, 2) + 1):
            assert universal_family(n, a, b).verify()


def test_universal_family_rejects_oversized_demands():
    with pytest.raises(ValueError):
        universal_family(1, 2, 0)


def _brute_sets(g, v, b, f):
    out = []
    for s in itertools.combinations([x for x in range(g.n) if x != v], b):
        cand = frozenset((v,) + s)
        sub, _ = g.induced(cand)
        if not sub.is_connected():
            continue
        nb = {u for x in cand for u in g.neighbors(x)} - cand
        if len(nb) == f:
            out.append(cand)
    return sorted(out, key=sorted)


def test_connected_sets_examples():
    g = WeightedGraph.from_edges(5, [(0, 1), (1, 2)])
    assert enumerate_connected_sets(g, 1, 0, 2) == [frozenset({1})]
    assert enumerate_connected_sets(g, 1, 0, 1) == []
    p5 = WeightedGraph.from_edges(5, [(i, i + 1) for i in range(4)])
    assert enumerate_connected_sets(p5, 2, 1, 2) == [frozenset({1, 2}), frozenset({2, 3})]
    k4 = WeightedGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert len(enumerate_connected_sets(k4, 0, 1, 2)) == 3 == comb(3, 1)


@given(weighted_graphs(min_n=1, max_n=8, max_w=1), st.integers(0, 3), st.integers(0, 3), st.data())
def test_connected_sets_match_brute_force(g, b, f, data):
    v = data.draw(st.integers(0, g.n - 1))
    got = enumerate_connected_sets(g, v, b, f)
    assert got == _brute_sets(g, v, b, f)
    assert len(got) <= comb(b + f, b)


def test_connected_sets_upto_collects_all_sizes():
    p5 = WeightedGraph.from_edges(5, [(i, i + 1) for i in range(4)])
    got = connected_sets_upto(p5, 0, 3, 1)
    assert sorted(map(sorted, got)) == [[0], [0, 1], [0, 1, 2]]


def test_bfs_bound_values():
    assert [bfs_bound(r) for r in (1, 2, 3, 4)] == [2, 7, 40, 341]


def test_restricted_bfs_examples():
    p3 = WeightedGraph.from_edges(3, [(0, 1), (1, 2)])
    res = restricted_bfs(p3, 0, 2)
    assert res.vertices == (0, 1, 2) and res.labels == {0: 0, 1: 1, 2: 2}
    star = WeightedGraph.from_edges(6, [(0, i) for i in range(1, 6)])
    res = restricted_bfs(star, 0, 2)
    assert res.vertices == (0, 1, 2) and len(res) <= bfs_bound(2)
    assert restricted_bfs(WeightedGraph(3), 1, 4).vertices == (1,)


@given(weighted_graphs(min_n=1, max_n=10, max_w=1), st.integers(2, 4), st.data())
def test_restricted_bfs_shape(g, r, data):
    u = data.draw(st.integers(0, g.n - 1))
    res = restricted_bfs(g, u, r)
    assert len(res) <= bfs_bound(r)
    assert res.labels[u] == 0
    for v, lab in res.labels.items():
        assert lab <= r
        if v != u:
            assert any(res.labels.get(x) == lab - 1 for x in g.neighbors(v))
