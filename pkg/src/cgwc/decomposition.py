"""Good edge separations and unbreakability.

A (q,p)-good separation is a bipartition (A, B) with |A| > q, |B| > q,
w(A,B) <= p and both sides connected.  When none exists the graph is
(pq, p)-unbreakable.

Search runs in two tiers.  When the number of edge sets of weight <= p is
small, every bond of weight <= p is listed and the answer is exact.
Otherwise seeded random contractions look for a separation; a miss is
reported as unbreakable, checked exhaustively when the graph is small enough
and flagged as uncertified otherwise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from .graph import INF, CgwcError, GraphError, WeightedGraph

# bond enumeration is used while the number of candidate edge sets stays below this
EXHAUSTIVE_LIMIT = 500_000
VERIFY_CAP = 16


class CapExceeded(CgwcError):
    pass


@dataclass(frozen=True)
class GoodSeparation:
    a: tuple[int, ...]
    b: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class Unbreakable:
    q_out: float | int
    p: int
    certified: bool = True


SeparationVerdict = Union[GoodSeparation, Unbreakable]


def _scale(q, p):
    return INF if q == INF else q * p


def is_good_separation(g: WeightedGraph, a, b, q, p) -> bool:
    sa, sb = set(a), set(b)
    if sa & sb or sa | sb != set(range(g.n)):
        return False
    if len(sa) <= q or len(sb) <= q:
        return False
    if g.cut_weight(sa, sb) > p:
        return False
    return g.induced(sorted(sa))[0].is_connected() and g.induced(sorted(sb))[0].is_connected()


def _best(cands):
    # minimum weight, then lexicographically smallest A
    return min(cands, key=lambda s: (s.weight, s.a)) if cands else None


def _bond_tier(g: WeightedGraph, q, p) -> GoodSeparation | None:
    eu, ev, ew = g.edge_arrays
    weights, sides = kernels.enumerate_bonds(np.ascontiguousarray(g.matrix), eu, ev, ew, int(p))
    if weights.size == 0:
        return None
    sizes = sides.sum(axis=1)
    ok = (sizes > q) & (g.n - sizes > q)
    cands = []
    for j in np.flatnonzero(ok):
        a = tuple(int(v) for v in np.flatnonzero(sides[j]))
        b = tuple(int(v) for v in np.flatnonzero(~sides[j]))
        cands.append(GoodSeparation(a, b, int(weights[j])))
    return _best(cands)


def _contract_once(g: WeightedGraph, rng: random.Random) -> list[int]:
    # Karger contraction down to two super-vertices; returns a label per vertex
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = list(g.edges)
    groups = g.n
    while groups > 2:
        u, v, _ = rng.choices(edges, weights=[w for _, _, w in edges])[0]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
            groups -= 1
        edges = [e for e in edges if find(e[0]) != find(e[1])]
        if not edges:
            break
    return [find(v) for v in range(g.n)]


def _random_tier(g: WeightedGraph, q, p, trials: int, seed: int) -> GoodSeparation | None:
    rng = random.Random(seed)
    cands = []
    for _ in range(trials):
        lab = _contract_once(g, rng)
        a = tuple(v for v in range(g.n) if lab[v] == lab[0])
        b = tuple(v for v in range(g.n) if lab[v] != lab[0])
        if b and is_good_separation(g, a, b, q, p):
            cands.append(GoodSeparation(a, b, g.cut_weight(a, b)))
    return _best(cands)


def find_good_separation(g: WeightedGraph, q, p: int, *, seed: int = 0,
                         trials: int | None = None) -> SeparationVerdict:
    """A (q,p)-good separation of a connected graph, or Unbreakable(pq, p)."""
    if not g.is_connected():
        raise GraphError("find_good_separation needs a connected graph")
    if p < 1 or (q != INF and q < 1):
        raise CgwcError("q and p must be at least 1")
    if q == INF or g.n < 2 * q + 2:
        return Unbreakable(_scale(q, p), p)
    eu, ev, ew = g.edge_arrays
    if kernels.count_subsets(ew, int(p), min(int(p), g.m)) <= EXHAUSTIVE_LIMIT:
        sep = _bond_tier(g, q, p)
        exact = True
    else:
        if trials is None:
            trials = max(32, int(g.n * g.n * math.log(g.n + 1)))
        sep = _random_tier(g, q, p, trials, seed)
        exact = False
    if sep is not None:
        if not is_good_separation(g, sep.a, sep.b, q, p):
            raise CgwcError("internal: separation failed verification")
        return sep
    verdict = Unbreakable(_scale(q, p), p, certified=exact)
    if g.n <= VERIFY_CAP:
        if not verify_unbreakable(g, verdict.q_out, p):
            raise CgwcError("internal: unbreakability verdict failed verification")
        verdict = Unbreakable(verdict.q_out, p, certified=True)
    return verdict


def verify_unbreakable(g: WeightedGraph, q, p: int, cap: int = VERIFY_CAP) -> bool:
    """Exhaustive check that every bipartition of weight <= p has a side of
    at most q vertices."""
    n = g.n
    if q >= n:
        return True
    if n > cap:
        raise CapExceeded(f"verify_unbreakable scans 2^(n-1) bipartitions; n={n} exceeds cap {cap}")
    # the last vertex always sits on the B side
    masks = np.arange(1 << (n - 1), dtype=np.int64)
    size_a = np.zeros(masks.shape, dtype=np.int64)
    for v in range(n - 1):
        size_a += (masks >> v) & 1
    cut = np.zeros(masks.shape, dtype=np.int64)
    for u, v, w in g.edges:
        bu = (masks >> u) & 1 if u < n - 1 else 0
        bv = (masks >> v) & 1 if v < n - 1 else 0
        cut += w * (bu ^ bv)
    bad = (cut <= p) & (size_a > q) & (n - size_a > q)
    return not bool(bad.any())
