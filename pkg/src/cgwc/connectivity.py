"""Global minimum cuts, minimum (A,B)-separators and alpha-classes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .graph import (
    INF,
    ConnSpec,
    Edge,
    GraphError,
    Solution,
    WeightedGraph,
    dominates,
    norm_edge,
)


@dataclass(frozen=True)
class CutResult:
    weight: float | int
    partition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    edges: Optional[tuple[Edge, ...]] = None


def _from_big(x) -> float | int:
    return INF if x >= kernels.BIG else int(x)


@lru_cache(maxsize=1 << 16)
def _sw(g: WeightedGraph) -> tuple:
    val, side = kernels.stoer_wagner(np.ascontiguousarray(g.matrix))
    return _from_big(val), side


def global_min_cut(g: WeightedGraph) -> CutResult:
    """λ^w(g) with a realizing bipartition; +inf for a single vertex."""
    if g.n == 0:
        raise GraphError("global min cut of the empty graph")
    if not g.is_connected():
        raise GraphError("global min cut needs a connected graph")
    val, side = _sw(g)
    if val == INF:
        return CutResult(INF)
    a = tuple(int(v) for v in np.flatnonzero(side))
    b = tuple(int(v) for v in np.flatnonzero(~side))
    if 0 not in a:
        a, b = b, a
    return CutResult(val, (a, b), tuple(g.cut_edges(a, b)))


def connectivity(g: WeightedGraph) -> float | int:
    """λ^w of a connected graph."""
    return global_min_cut(g).weight


def min_separator(g: WeightedGraph, a: Iterable[int], b: Iterable[int]) -> CutResult:
    """Minimum-weight (A,B)-separator in the form E(A', B') with A ⊆ A'.

    A' is the source side minimal under inclusion (residual reachability).
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise GraphError("terminal sets must be nonempty")
    if sa & sb:
        raise GraphError("terminal sets overlap")
    for v in sa | sb:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex {v}")
    val, side = _flow(g, frozenset(sa), frozenset(sb))
    a_side = tuple(v for v in range(g.n) if side[v])
    b_side = tuple(v for v in range(g.n) if not side[v])
    return CutResult(val, (a_side, b_side), tuple(g.cut_edges(a_side, b_side)))


@lru_cache(maxsize=1 << 16)
def _flow(g: WeightedGraph, sa: frozenset, sb: frozenset) -> tuple:
    n = g.n
    cap = np.zeros((n + 2, n + 2), dtype=np.int64)
    cap[:n, :n] = g.matrix
    s, t = n, n + 1
    for v in sa:
        cap[s, v] = cap[v, s] = kernels.BIG
    for v in sb:
        cap[t, v] = cap[v, t] = kernels.BIG
    val, side = kernels.max_flow(cap, s, t)
    return int(val), tuple(bool(x) for x in side[:n])


def separator_weight(g: WeightedGraph, a: Iterable[int], b: Iterable[int]) -> int:
    sa, sb = frozenset(a), frozenset(b)
    return _flow(g, sa, sb)[0]


def pair_connectivity(g: WeightedGraph, u: int, v: int) -> float | int:
    """λ^w(u, v); +inf when u == v."""
    if u == v:
        return INF
    return separator_weight(g, (u,), (v,))


def alpha_classes(g: WeightedGraph, alpha: int) -> list[tuple[int, ...]]:
    """Classes of the relation λ^w(u, v) >= alpha, ordered by lowest vertex.

    Each vertex is compared against one representative per existing class,
    which suffices because the relation is an equivalence.
    """
    if alpha < 1:
        raise GraphError("alpha must be at least 1")
    comp_of = {}
    for i, c in enumerate(g.components()):
        for v in c:
            comp_of[v] = i
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            rep = cls[0]
            if comp_of[rep] == comp_of[v] and pair_connectivity(g, rep, v) >= alpha:
                cls.append(v)
                break
        else:
            classes.append([v])
    return [tuple(c) for c in classes]


# -- certificates -----------------------------------------------------------

def component_profile(g: WeightedGraph) -> tuple[tuple[tuple[int, ...], float | int], ...]:
    """(vertices, λ^w) for every component, ordered by lowest vertex."""
    out = []
    for comp in g.components():
        if len(comp) == 1:
            out.append((comp, INF))
        else:
            sub, _ = g.induced(comp)
            out.append((comp, _sw(sub)[0]))
    return tuple(out)


def certify(
    g: WeightedGraph,
    f: Iterable[Edge],
    spec: ConnSpec,
    k: float | int,
    allowed: Optional[Iterable[Edge]] = None,
) -> Optional[Solution]:
    """Recheck a candidate deletion set from scratch.

    Returns the Solution when F is within budget (and inside ``allowed``),
    G - F has exactly |spec| components and their sorted connectivities
    dominate the spec; None otherwise.
    """
    fs = frozenset(norm_edge(*e) for e in f)
    if not fs <= g.edge_set:
        return None
    if allowed is not None and not fs <= frozenset(norm_edge(*e) for e in allowed):
        return None
    wf = g.weight_of(fs)
    if wf > k:
        return None
    comps = component_profile(g.remove_edges(fs))
    if not dominates([c for _, c in comps], spec):
        return None
    return Solution(fs, wf, comps)
