import itertools

import pytest
from hypothesis import given, strategies as st

from cgwc import iso
from cgwc.connectivity import component_profile
from cgwc.graph import INF, BoundariedGraph, GraphError, WeightedGraph, boundary_sum
from cgwc.mimick import (
    FamilyCapExceeded,
    cut_reduce,
    enumerate_family,
    labeled_count,
    reduction_blocks,
    size_bound,
)

from cutsig import component_signatures
from family_reference import reference_family


def _profile(g, p):
    return sorted(min(c, p) for _, c in component_profile(g))


def test_isolated_boundary_unchanged():
    h = BoundariedGraph(WeightedGraph(2), (0, 1))
    for p in (1, 3, INF):
        assert cut_reduce(h, p) == h


def test_path_from_boundary():
    h = BoundariedGraph(WeightedGraph.from_edges(3, [(0, 1), (1, 2)]), (0,))
    red = cut_reduce(h, INF)
    assert red.graph.n <= 3
    for n in range(1, 5):
        for fg in iso.weighted_graphs(n, (1, 2)):
            for x in iso.boundary_tuples(fg, 1, proper=False):
                f = BoundariedGraph(fg, x)
                a, b = boundary_sum(f, h), boundary_sum(f, red)
                assert _profile(a, INF) == _profile(b, INF)


def test_size_bound_r3():
    g = WeightedGraph.from_edges(
        9, [(0, 3), (1, 4), (2, 5), (3, 4), (4, 5), (3, 6), (6, 7), (7, 8), (8, 5), (6, 8)]
    )
    red = cut_reduce(BoundariedGraph(g, (0, 1, 2)), INF)
    assert red.graph.n <= size_bound(3) == 19


def test_improper_input_rejected():
    bad = BoundariedGraph(WeightedGraph.from_edges(2, [(0, 1)]), (0, 1))
    with pytest.raises(GraphError):
        cut_reduce(bad)
    with pytest.raises(ValueError):
        cut_reduce(BoundariedGraph(WeightedGraph(1), (0,)), 0)


def test_boundary_vertices_are_singleton_blocks():
    for g in iso.weighted_graphs(5, (1, 2)):
        for x in iso.boundary_tuples(g, 2):
            blocks = reduction_blocks(BoundariedGraph(g, x)).blocks
            assert sorted(v for b in blocks for v in b) == list(range(5))
            for v in x:
                assert (v,) in blocks


def _proper(draw_graph, r):
    n = draw_graph.n
    if n < r:
        return None
    for x in iso.boundary_tuples(draw_graph, r):
        return BoundariedGraph(draw_graph, x)
    return None


@given(st.integers(2, 6).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 3)), max_size=10
).map(lambda es: (n, es))), st.integers(1, 3), st.sampled_from([1, 2, 3, INF]))
def test_signatures_preserved(data, r, p):
    n, es = data
    edges = {}
    for u, v, w in es:
        if u != v:
            edges[(min(u, v), max(u, v))] = w
    g = WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in edges.items()])
    h = _proper(g, r)
    if h is None:
        return
    red = cut_reduce(h, p)
    before = component_signatures(h.graph, h.boundary, p)
    after = component_signatures(red.graph, red.boundary, p)
    assert sorted(before.values()) == sorted(after.values())
    assert red.graph.n <= sum(size_bound(len(k)) for k in before)


def test_reduction_never_grows_on_repeat():
    for g in iso.weighted_graphs(5, (1, 2)):
        for x in iso.boundary_tuples(g, 2):
            h = BoundariedGraph(g, x)
            once = cut_reduce(h, INF)
            twice = cut_reduce(once, INF)
            assert twice.graph.n <= once.graph.n


def test_block_count_bound():
    # m bipartitions give at most 2^m blocks, plus r boundary singletons
    for g in iso.weighted_graphs(6, (1,)):
        for r in (1, 2):
            for x in iso.boundary_tuples(g, r):
                h = BoundariedGraph(g, x)
                blocks = reduction_blocks(h).blocks
                per = 0
                for c in g.components():
                    rc = len(set(c) & set(x))
                    per += 2 ** (2 ** (rc - 1))
                assert len(blocks) <= per + r


def test_family_r0():
    fam = enumerate_family(0, 3)
    assert len(fam) == 1 and fam[0].graph.n == 0


def test_family_r1_s1():
    fam = enumerate_family(1, 1)
    shapes = sorted((m.graph.n, m.graph.edges) for m in fam)
    assert shapes == [
        (1, ()),
        (2, ((0, 1, 1),)),
        (3, ((0, 1, 1), (0, 2, 1))),
        (3, ((0, 1, 1), (1, 2, 1))),
    ]


@pytest.mark.parametrize("r,s", [(1, 1), (1, 2), (1, 3), (2, 1)])
def test_family_matches_reference(r, s):
    ours = enumerate_family(r, s)
    ref = reference_family(r, s, size_bound(r))
    assert len(ours) == len(ref)
    for m in ours:
        assert m.graph.n <= size_bound(r)
        assert m.boundary == tuple(range(r))


def test_family_caps():
    with pytest.raises(FamilyCapExceeded):
        enumerate_family(3, 1)
    with pytest.raises(FamilyCapExceeded):
        enumerate_family(2, 2)
    assert labeled_count(2, 2, 6) > 1 << 18
    with pytest.raises(ValueError):
        enumerate_family(1, 0)
