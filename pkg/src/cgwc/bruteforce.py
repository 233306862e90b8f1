"""Bounded brute force used inside the solver.

For a graph and a set of deletable edges, one kernel call profiles every
deletion set up to a weight cap; queries for any spec and budget below the
cap are then answered from that table.  The first accepted row has minimum
weight (ties broken by lexicographic order of edge indices).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .graph import INF, CgwcError, ConnSpec, Edge, WeightedGraph, norm_edge

# refuse tables larger than this many deletion sets
ROW_LIMIT = 2_000_000


class SearchTooLarge(CgwcError):
    pass


class DeletionTable:
    def __init__(self, g: WeightedGraph, cand: tuple[Edge, ...], kmax: int):
        self.g = g
        self.cand = cand
        self.kmax = kmax
        idx = [g.edge_index[e] for e in cand]
        eu, ev, ew = g.edge_arrays
        cu, cv, cw = eu[idx], ev[idx], ew[idx]
        depth = min(kmax, len(cand))
        rows = kernels.count_subsets(cw, kmax, depth)
        if rows > ROW_LIMIT:
            raise SearchTooLarge(
                f"{rows} deletion sets to examine; lower k or restrict the deletable edges"
            )
        subsets, weights, ncomp, conns = kernels.deletion_profiles(
            np.ascontiguousarray(g.matrix), cu, cv, cw, kmax, depth
        )
        order = np.argsort(weights, kind="stable")
        self.subsets = subsets[order]
        self.weights = weights[order]
        self.ncomp = ncomp[order]
        self.conns = conns[order]

    def first(self, spec: ConnSpec, k: int, mask_fn=None) -> Optional[tuple[Edge, ...]]:
        """Lowest-weight deletion set meeting the spec within budget k."""
        t = len(spec)
        n = self.g.n
        if t > n or (t == 0) != (n == 0) or k < 0:
            return None
        ok = (self.weights <= k) & (self.ncomp == t)
        if t:
            need = np.array([kernels.BIG if x == INF else int(x) for x in spec], dtype=np.int64)
            ok &= np.all(self.conns[:, :t] >= need, axis=1)
        if mask_fn is not None:
            ok &= mask_fn(self)
        hit = int(np.argmax(ok)) if ok.size else 0
        if not ok.size or not ok[hit]:
            return None
        return tuple(self.cand[j] for j in self.subsets[hit] if j >= 0)


@lru_cache(maxsize=8192)
def _build(g: WeightedGraph, cand: tuple[Edge, ...], kmax: int) -> DeletionTable:
    return DeletionTable(g, cand, kmax)


def table(g: WeightedGraph, allowed: Iterable[Edge], k: int) -> DeletionTable:
    cand = tuple(sorted(norm_edge(*e) for e in allowed))
    kmax = int(k)
    if kmax < 3:
        # round small caps up when cheap so that sweeps over k share a table
        cw = np.array([g.weight(*e) for e in cand], dtype=np.int64)
        if kernels.count_subsets(cw, 3, min(3, len(cand))) <= 50_000:
            kmax = 3
    return _build(g, cand, kmax)


def brute_force(g: WeightedGraph, allowed: Iterable[Edge], spec: ConnSpec, k: int
                ) -> Optional[tuple[Edge, ...]]:
    """Minimum-weight F ⊆ allowed with w(F) <= k solving the spec, or None."""
    if k < 0:
        return None
    return table(g, allowed, k).first(spec, int(k))
