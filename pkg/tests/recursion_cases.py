"""Instances on which the good-separation branch fires under q = 3, p = 2k,
plus exhaustive checks of the two equivalences each step relies on."""

import itertools

from cgwc.graph import BoundariedGraph, ConnSpec, WeightedGraph, boundary_sum_ids, norm_edge
from cgwc.mimick import FamilyCapExceeded, enumerate_family
from cgwc.oracle import accepts
from cgwc.recursive import RecursionConfig


def clique(vs, w=1):
    return [(u, v, w) for u, v in itertools.combinations(vs, 2)]


def cycle(vs, w=1):
    vs = list(vs)
    return [(a, b, w) for a, b in zip(vs, vs[1:] + vs[:1])]


def _g(n, edges):
    return WeightedGraph.from_edges(n, edges)


CASES = [
    ("two_k4_bridge_33", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1)]), (3, 3), 1),
    ("two_k4_bridge_11", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1)]), (1, 1), 1),
    ("two_k4_bridge_13", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1)]), (1, 3), 1),
    ("two_k4_double", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1), (2, 5, 1)]), (3, 3), 2),
    ("heavy_k4_pair", _g(8, clique(range(4), 2) + clique(range(4, 8), 2) + [(0, 7, 1)]), (6, 6), 1),
    ("k4_c4_bridge", _g(8, clique(range(4)) + cycle(range(4, 8)) + [(0, 4, 1)]), (2, 3), 1),
    ("cycle8", _g(8, cycle(range(8))), (1, 1), 2),
    ("ladder", _g(10, [(i, i + 1, 1) for i in range(4)] + [(i, i + 1, 1) for i in range(5, 9)]
                  + [(i, i + 5, 1) for i in range(5)]), (2, 2), 2),
    ("k4_chain_two_parts", _g(12, clique(range(4)) + clique(range(4, 8)) + clique(range(8, 12))
                              + [(3, 4, 1), (7, 8, 1)]), (3, 3), 1),
    ("k4_chain_three_parts", _g(12, clique(range(4)) + clique(range(4, 8)) + clique(range(8, 12))
                                + [(3, 4, 1), (7, 8, 1)]), (3, 3, 3), 2),
    ("k4_c4_no", _g(8, clique(range(4)) + cycle(range(4, 8)) + [(0, 4, 1)]), (3, 3), 1),
    ("c4_pair_weighted", _g(8, cycle(range(4), 2) + cycle(range(4, 8), 1) + [(1, 6, 1)]), (2, 4), 1),
]

CFG = RecursionConfig(q_const=3, p_const=2, force_bruteforce_at=0)


def cfg_for(k):
    return RecursionConfig(q_const=3, p_const=2 * k, force_bruteforce_at=0)


def completions(r, k, limit_cap=True):
    try:
        return enumerate_family(r, max(2 * k, 1))
    except FamilyCapExceeded:
        # unit-weight family as a smaller, still nontrivial completion set
        return enumerate_family(r, 1)


def _subsets(allowed, g, k):
    allowed = sorted(allowed)
    for size in range(len(allowed) + 1):
        for f in itertools.combinations(allowed, size):
            if g.weight_of(f) <= k:
                yield f


def solvable(g, allowed, spec, k):
    return any(accepts(g, None, spec, k, f) for f in _subsets(allowed, g, k))


def check_allowed_reduction(step, spec, k):
    """Same yes/no status with L and with the reduced L*, for every completion
    and every sub-spec."""
    bg = BoundariedGraph(step.graph, step.boundary)
    checked = 0
    for h in completions(bg.r, k):
        glued, _ = boundary_sum_ids(bg, h)
        for sub in ConnSpec(spec).sub_specs():
            a = solvable(glued, step.allowed, sub, k)
            b = solvable(glued, step.reduced_allowed, sub, k)
            if a != b:
                return False, (h, sub)
            checked += 1
    return True, checked


def check_graph_reduction(step, spec, k):
    """Every F inside L* solves the instance on G iff it solves the one on G*."""
    if step.reduced_graph is None:
        return True, 0
    bg = BoundariedGraph(step.graph, step.boundary)
    bs = BoundariedGraph(step.reduced_graph, step.reduced_boundary)
    pos = {v: i for i, v in enumerate(step.q_ids)}
    checked = 0
    for h in completions(bg.r, k):
        g1, _ = boundary_sum_ids(bg, h)
        g2, _ = boundary_sum_ids(bs, h)
        for sub in ConnSpec(spec).sub_specs():
            for f in _subsets(step.reduced_allowed, step.graph, k):
                f2 = [norm_edge(pos[u], pos[v]) for u, v in f]
                if accepts(g1, None, sub, k, f) != accepts(g2, None, sub, k, f2):
                    return False, (h, sub, f)
                checked += 1
    return True, checked


BORDERED_CASES = [
    ("two_k4_bridge_r1", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1)]), (0,), (3, 3), 1),
    ("two_k4_bridge_r1_far", _g(8, clique(range(4)) + clique(range(4, 8)) + [(3, 4, 1)]), (7,), (1, 3), 1),
    ("k4_c4_r1", _g(8, clique(range(4)) + cycle(range(4, 8)) + [(0, 4, 1)]), (6,), (2, 3), 1),
]
