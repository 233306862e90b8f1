import itertools

import pytest
from hypothesis import given, strategies as st

from cgwc import iso
from cgwc.connectivity import (
    alpha_classes,
    component_profile,
    connectivity,
    global_min_cut,
    min_separator,
    pair_connectivity,
)
from cgwc.graph import INF, GraphError, WeightedGraph

from conftest import brute_connectivity, weighted_graphs

TWO_TRIANGLES = WeightedGraph.from_edges(
    6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
)
K4 = WeightedGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
C4 = WeightedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_global_min_cut_examples():
    assert global_min_cut(WeightedGraph(1)).weight == INF
    res = global_min_cut(WeightedGraph.from_edges(2, [(0, 1, 5)]))
    assert res.weight == 5 and res.partition == ((0,), (1,))
    assert connectivity(C4) == 2
    assert connectivity(K4) == 3


def test_global_min_cut_rejects_disconnected():
    with pytest.raises(GraphError):
        global_min_cut(WeightedGraph(2))


@given(weighted_graphs(min_n=2, max_n=7, connected=True))
def test_global_min_cut_matches_brute_force(g):
    res = global_min_cut(g)
    assert res.weight == brute_connectivity(g)
    a, b = res.partition
    assert a and b and sorted(a + b) == list(range(g.n))
    assert g.cut_weight(a, b) == res.weight


def test_min_separator_examples():
    assert min_separator(WeightedGraph(2), [0], [1]).weight == 0
    path = WeightedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert min_separator(path, [0], [2]).weight == 1
    res = min_separator(TWO_TRIANGLES, [0], [5])
    assert res.weight == 1 and res.edges == ((2, 3),)


def test_min_separator_errors():
    with pytest.raises(GraphError):
        min_separator(K4, [], [1])
    with pytest.raises(GraphError):
        min_separator(K4, [0, 1], [1])


@given(weighted_graphs(min_n=2, max_n=6), st.data())
def test_min_separator_is_minimum_and_symmetric(g, data):
    verts = list(range(g.n))
    a = data.draw(st.sets(st.sampled_from(verts), min_size=1, max_size=g.n - 1))
    b = data.draw(st.sets(st.sampled_from([v for v in verts if v not in a]), min_size=1))
    res = min_separator(g, a, b)
    assert res.weight == min_separator(g, b, a).weight
    A, B = res.partition
    assert a <= set(A) and b <= set(B)
    assert g.cut_weight(A, B) == res.weight
    free = [v for v in verts if v not in a | b]
    best = min(
        g.cut_weight(a | set(s), [v for v in verts if v not in a | set(s)])
        for k in range(len(free) + 1) for s in itertools.combinations(free, k)
    )
    assert res.weight == best


def test_alpha_classes_examples():
    assert alpha_classes(WeightedGraph.from_edges(4, [(0, 1), (2, 3)]), 1) == [(0, 1), (2, 3)]
    assert alpha_classes(TWO_TRIANGLES, 2) == [(0, 1, 2), (3, 4, 5)]
    assert alpha_classes(K4, 3) == [(0, 1, 2, 3)]


def test_connectivity_is_min_pair_connectivity():
    for n in range(2, 7):
        for g in iso.weighted_graphs(n, (1, 2, 3), connected=True) if n <= 4 else \
                iso.weighted_graphs(n, (1,), connected=True):
            pairs = min(pair_connectivity(g, u, v) for u, v in itertools.combinations(range(n), 2))
            assert connectivity(g) == pairs


@given(weighted_graphs(min_n=2, max_n=7), st.integers(1, 4))
def test_alpha_classes_refine_and_are_transitive(g, alpha):
    fine = alpha_classes(g, alpha + 1)
    coarse = alpha_classes(g, alpha)
    where = {v: i for i, c in enumerate(coarse) for v in c}
    for c in fine:
        assert len({where[v] for v in c}) == 1
    for c in coarse:
        for u, v in itertools.combinations(c, 2):
            assert pair_connectivity(g, u, v) >= alpha
    for c1, c2 in itertools.combinations(coarse, 2):
        assert pair_connectivity(g, c1[0], c2[0]) < alpha


def test_component_profile_singletons_are_infinite():
    g = WeightedGraph.from_edges(4, [(1, 2, 3)])
    assert component_profile(g) == (((0,), INF), ((1, 2), 3), ((3,), INF))
