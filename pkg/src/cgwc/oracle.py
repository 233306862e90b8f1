"""Ground-truth brute force for small instances.

Deliberately shares no cut code with the solver: components come from
bitmask closure and connectivities from scanning every bipartition of each
component.  Every deletion set F ⊆ L with w(F) <= k is examined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from ._jit import njit
from .graph import INF, CgwcError, ConnSpec, Edge, Solution, WeightedGraph, norm_edge
from . import iso

_TOP = np.int64(1) << np.int64(62)


class BudgetExceeded(CgwcError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 16
    max_edges: int = 20
    max_weight: int = 1 << 20
    max_budget: int = 64


DEFAULT_BUDGET = OracleBudget()


@njit
def _closure(adj, start):
    comp = np.int64(1) << start
    frontier = comp
    while frontier:
        nxt = np.int64(0)
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= adj[v]
            f >>= 1
            v += 1
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    return comp


@njit
def _bipartition_cut(n, eu, ev, ew, alive, comp):
    """Minimum over all bipartitions of the vertex mask ``comp``."""
    low = 0
    while not (comp >> low) & 1:
        low += 1
    rest = comp & ~(np.int64(1) << low)
    best = _TOP
    # every side X containing the lowest vertex, X != comp
    sub = rest
    while True:
        x = sub | (np.int64(1) << low)
        if x != comp:
            cut = np.int64(0)
            for e in range(eu.shape[0]):
                if alive[e]:
                    a = (x >> eu[e]) & 1
                    b = (x >> ev[e]) & 1
                    if a != b and (comp >> eu[e]) & 1:
                        cut += ew[e]
            if cut < best:
                best = cut
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return best


@njit
def _scan(n, eu, ev, ew, lidx, kmax):
    """Examine every subset of the listed edges with weight <= kmax.

    Returns masks over ``lidx`` positions, weights, component counts and
    sorted connectivities (padded with the +inf sentinel).
    """
    nl = lidx.shape[0]
    count = 0
    for mask in range(1 << nl):
        wsum = 0
        for j in range(nl):
            if (mask >> j) & 1:
                wsum += ew[lidx[j]]
        if wsum <= kmax:
            count += 1
    masks = np.zeros(count, dtype=np.int64)
    weights = np.zeros(count, dtype=np.int64)
    ncomp = np.zeros(count, dtype=np.int64)
    conns = np.full((count, max(n, 1)), _TOP, dtype=np.int64)
    m = eu.shape[0]
    alive = np.ones(m, dtype=np.bool_)
    adj = np.zeros(max(n, 1), dtype=np.int64)
    row = 0
    for mask in range(1 << nl):
        wsum = 0
        for j in range(nl):
            if (mask >> j) & 1:
                wsum += ew[lidx[j]]
        if wsum > kmax:
            continue
        for e in range(m):
            alive[e] = True
        for j in range(nl):
            if (mask >> j) & 1:
                alive[lidx[j]] = False
        for v in range(n):
            adj[v] = 0
        for e in range(m):
            if alive[e]:
                adj[eu[e]] |= np.int64(1) << ev[e]
                adj[ev[e]] |= np.int64(1) << eu[e]
        seen = np.int64(0)
        c = 0
        for v in range(n):
            if (seen >> v) & 1:
                continue
            comp = _closure(adj, v)
            seen |= comp
            if comp == (np.int64(1) << v):
                conns[row, c] = _TOP
            else:
                conns[row, c] = _bipartition_cut(n, eu, ev, ew, alive, comp)
            c += 1
        conns[row, :c].sort()
        masks[row] = mask
        weights[row] = wsum
        ncomp[row] = c
        row += 1
    return masks, weights, ncomp, conns


class _Table:
    def __init__(self, g: WeightedGraph, allowed: tuple[Edge, ...], kmax: int):
        self.g = g
        self.allowed = allowed
        self.kmax = kmax
        eu, ev, ew = g.edge_arrays
        lidx = np.array([g.edge_index[e] for e in allowed], dtype=np.int64)
        self.masks, self.weights, self.ncomp, self.conns = _scan(g.n, eu, ev, ew, lidx, kmax)

    def query(self, spec: ConnSpec, k: int) -> Optional[tuple[Edge, ...]]:
        t = len(spec)
        if t > max(self.g.n, 0) or (t == 0) != (self.g.n == 0):
            return None
        ok = (self.weights <= k) & (self.ncomp == t)
        if t:
            need = np.array([_TOP if x == INF else int(x) for x in spec], dtype=np.int64)
            ok &= np.all(self.conns[:, :t] >= need, axis=1)
        rows = np.flatnonzero(ok)
        if rows.size == 0:
            return None
        wmin = self.weights[rows].min()
        best = None
        for r in rows[self.weights[rows] == wmin]:
            f = tuple(sorted(self.allowed[j] for j in range(len(self.allowed)) if (self.masks[r] >> j) & 1))
            if best is None or f < best:
                best = f
        return best


@lru_cache(maxsize=4096)
def _table(g: WeightedGraph, allowed: tuple[Edge, ...], kmax: int) -> _Table:
    return _Table(g, allowed, kmax)


def _components(g: WeightedGraph, f: frozenset) -> tuple:
    """Certificate for G - F computed with the oracle's own routines."""
    eu, ev, ew = g.edge_arrays
    alive = np.array([(u, v) not in f for u, v, _ in g.edges], dtype=np.bool_)
    adj = np.zeros(max(g.n, 1), dtype=np.int64)
    for e in range(g.m):
        if alive[e]:
            adj[eu[e]] |= 1 << int(ev[e])
            adj[ev[e]] |= 1 << int(eu[e])
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = int(_closure(adj, v))
        seen |= comp
        verts = tuple(u for u in range(g.n) if (comp >> u) & 1)
        if len(verts) == 1:
            lam = INF
        else:
            lam = int(_bipartition_cut(g.n, eu, ev, ew, alive, np.int64(comp)))
        out.append((verts, lam))
    return tuple(out)


def oracle_solve(
    g: WeightedGraph,
    allowed: Optional[Iterable[Edge]],
    spec: ConnSpec,
    k: int,
    budget: OracleBudget = DEFAULT_BUDGET,
    kmax: Optional[int] = None,
) -> Optional[Solution]:
    """Minimum-weight solution (lexicographically smallest edge list among
    ties) or None.  ``allowed=None`` means every edge may be deleted.

    ``kmax`` lets callers that sweep k share one scan of the subsets.
    """
    allowed_t = tuple(sorted(g.edge_set if allowed is None else {norm_edge(*e) for e in allowed}))
    if not set(allowed_t) <= g.edge_set:
        raise CgwcError("allowed edges must belong to the graph")
    if g.n > budget.max_vertices or len(allowed_t) > budget.max_edges:
        raise BudgetExceeded(
            f"oracle limited to {budget.max_vertices} vertices and {budget.max_edges} "
            f"deletable edges (got {g.n}, {len(allowed_t)}); shrink the instance"
        )
    if k > budget.max_budget or any(w > budget.max_weight for _, _, w in g.edges):
        raise BudgetExceeded("budget or edge weight beyond oracle limits")
    if k < 0:
        return None
    scan_k = max(int(k), int(kmax or 0))
    f = _table(g, allowed_t, scan_k).query(spec, int(k))
    if f is None:
        return None
    fs = frozenset(f)
    return Solution(fs, g.weight_of(fs), _components(g, fs))


def accepts(g: WeightedGraph, allowed: Optional[Iterable[Edge]], spec: ConnSpec, k: int,
            f: Iterable[Edge]) -> bool:
    """The problem's accept predicate, evaluated literally."""
    fs = frozenset(norm_edge(*e) for e in f)
    if not fs <= g.edge_set:
        return False
    if allowed is not None and not fs <= {norm_edge(*e) for e in allowed}:
        return False
    if g.weight_of(fs) > k:
        return False
    comps = _components(g, fs)
    if len(comps) != len(spec):
        return False
    return all(a <= b for a, b in zip(spec.entries, sorted(c for _, c in comps)))


def enumerate_graphs(n_max: int, weight_set: Iterable[int] = (1,), n_min: Optional[int] = None
                     ) -> Iterator[WeightedGraph]:
    """Graphs up to isomorphism, every weight assignment from ``weight_set``.

    By default only graphs on exactly ``n_max`` vertices are produced; pass
    ``n_min`` to sweep a range of sizes.
    """
    if n_max > 7:
        raise BudgetExceeded("enumerate_graphs is limited to n_max <= 7")
    lo = n_max if n_min is None else n_min
    yield from iso.iter_graphs(n_max, tuple(sorted(set(weight_set))), n_min=lo)
