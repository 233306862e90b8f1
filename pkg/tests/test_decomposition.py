import itertools

import pytest
from hypothesis import given, strategies as st

from cgwc import decomposition
from cgwc.decomposition import (
    CapExceeded,
    GoodSeparation,
    Unbreakable,
    find_good_separation,
    is_good_separation,
    verify_unbreakable,
)
from cgwc.graph import INF, GraphError, WeightedGraph

from conftest import weighted_graphs


def _clique(vs):
    return [(u, v) for u, v in itertools.combinations(vs, 2)]


TWO_K4 = WeightedGraph.from_edges(8, _clique(range(4)) + _clique(range(4, 8)) + [(3, 4)])
K5 = WeightedGraph.from_edges(5, _clique(range(5)))
P10 = WeightedGraph.from_edges(10, [(i, i + 1) for i in range(9)])


def test_two_k4_separates():
    v = find_good_separation(TWO_K4, 3, 1)
    assert v == GoodSeparation((0, 1, 2, 3), (4, 5, 6, 7), 1)


def test_k5_unbreakable():
    v = find_good_separation(K5, 1, 2)
    assert isinstance(v, Unbreakable) and v.q_out == 2 and v.p == 2 and v.certified
    assert verify_unbreakable(K5, 1, 2)


def test_path_separates_in_the_middle():
    v = find_good_separation(P10, 2, 1)
    assert isinstance(v, GoodSeparation)
    assert 3 <= len(v.a) <= 7 and v.weight == 1
    assert not verify_unbreakable(P10, 2, 1)


def test_large_q_is_trivially_unbreakable():
    assert verify_unbreakable(P10, 10, 1)
    assert isinstance(find_good_separation(P10, INF, 2), Unbreakable)


def test_errors():
    with pytest.raises(GraphError):
        find_good_separation(WeightedGraph(2), 1, 1)
    with pytest.raises(ValueError):
        find_good_separation(K5, 1, 0)
    big = WeightedGraph.from_edges(20, [(i, i + 1) for i in range(19)])
    with pytest.raises(CapExceeded):
        verify_unbreakable(big, 1, 1)


def _all_good(g, q, p):
    out = []
    for mask in range(1, (1 << g.n) - 1):
        a = tuple(v for v in range(g.n) if (mask >> v) & 1)
        b = tuple(v for v in range(g.n) if not (mask >> v) & 1)
        if is_good_separation(g, a, b, q, p):
            out.append((g.cut_weight(a, b), a))
    return out


@given(weighted_graphs(min_n=4, max_n=8, max_w=2, connected=True), st.integers(1, 2), st.integers(1, 3))
def test_tie_break_prefers_light_then_lexicographic(g, q, p):
    v = find_good_separation(g, q, p)
    cands = _all_good(g, q, p)
    if not cands:
        assert isinstance(v, Unbreakable)
    else:
        assert (v.weight, v.a) == min(cands)


def test_random_tier_returns_verified_separation():
    sep = decomposition._random_tier(TWO_K4, 3, 1, trials=200, seed=1)
    assert sep is not None and is_good_separation(TWO_K4, sep.a, sep.b, 3, 1)


@given(weighted_graphs(min_n=4, max_n=9, max_w=2, connected=True), st.integers(1, 3), st.integers(1, 3))
def test_verdicts_hold(g, q, p):
    v = find_good_separation(g, q, p)
    if isinstance(v, GoodSeparation):
        assert is_good_separation(g, v.a, v.b, q, p)
    else:
        assert verify_unbreakable(g, v.q_out, p)


@given(weighted_graphs(min_n=4, max_n=9, max_w=1, connected=True), st.integers(1, 2), st.integers(1, 3))
def test_low_weight_side_has_large_piece(g, q, p):
    # a side of a cheap cut larger than pq has a connected piece of at least q vertices
    for mask in range(1, 1 << (g.n - 1)):
        a = [v for v in range(g.n) if (mask >> v) & 1]
        b = [v for v in range(g.n) if not (mask >> v) & 1]
        if g.cut_weight(a, b) > p or len(a) <= p * q or len(b) <= p * q:
            continue
        for side in (a, b):
            sub, _ = g.induced(side)
            assert max(len(c) for c in sub.components()) >= q
