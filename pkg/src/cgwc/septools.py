"""Separating families, connected-set enumeration and restricted BFS."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .graph import CgwcError, GraphError, WeightedGraph

# greedy cover is attempted when there are at most this many demand pairs
GREEDY_DEMANDS = 20_000
GREEDY_UNIVERSE = 12


@dataclass(frozen=True)
class SepFamily:
    universe_size: int
    a: int
    b: int
    sets: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def covers(self, inside, outside) -> bool:
        ins, outs = frozenset(inside), frozenset(outside)
        return any(ins <= s and not (outs & s) for s in self.sets)

    def verify(self) -> bool:
        """Exhaustive covering check over every disjoint (A, B)."""
        n = self.universe_size
        masks = np.array([sum(1 << v for v in s) for s in self.sets], dtype=np.int64)
        for amask, bmask in _demands(n, self.a, self.b):
            if not np.any(((masks & amask) == amask) & ((masks & bmask) == 0)):
                return False
        return True


def _subsets_upto(n: int, size: int):
    for s in range(min(size, n) + 1):
        yield from itertools.combinations(range(n), s)


def _demands(n: int, a: int, b: int):
    for A in _subsets_upto(n, a):
        amask = sum(1 << v for v in A)
        rest = [v for v in range(n) if not (amask >> v) & 1]
        for s in range(min(b, len(rest)) + 1):
            for B in itertools.combinations(rest, s):
                yield amask, sum(1 << v for v in B)


def _count_upto(n: int, size: int) -> int:
    return sum(comb(n, s) for s in range(min(size, n) + 1))


def _greedy(n: int, a: int, b: int) -> list[frozenset[int]]:
    dem = np.array(list(_demands(n, a, b)), dtype=np.int64)
    cand = np.arange(1 << n, dtype=np.int64)
    left = np.ones(len(dem), dtype=bool)
    chosen = []
    while left.any():
        am, bm = dem[left, 0], dem[left, 1]
        gain = np.zeros(len(cand), dtype=np.int64)
        for j in range(0, len(am), 512):
            c = cand[:, None]
            hit = ((c & am[None, j:j + 512]) == am[None, j:j + 512]) & ((c & bm[None, j:j + 512]) == 0)
            gain += hit.sum(axis=1)
        best = int(cand[int(np.argmax(gain))])
        chosen.append(frozenset(v for v in range(n) if (best >> v) & 1))
        left &= ~(((best & dem[:, 0]) == dem[:, 0]) & ((best & dem[:, 1]) == 0))
    return chosen


@lru_cache(maxsize=256)
def universal_family(n: int, a: int, b: int) -> SepFamily:
    """Sets S over range(n) such that every disjoint A, B with |A| <= a and
    |B| <= b has some S with A ⊆ S and S ∩ B = ∅."""
    if not (0 <= a <= n and 0 <= b <= n):
        raise CgwcError("universal_family needs 0 <= a, b <= n")
    universe = frozenset(range(n))
    if a == 0:
        return SepFamily(n, a, b, (frozenset(),))
    if b == 0:
        return SepFamily(n, a, b, (universe,))
    # two exact constructions: drop at most b elements, or take at most a
    drop = _count_upto(n, b)
    take = _count_upto(n, a)
    if drop <= take:
        sets = [universe - frozenset(B) for B in _subsets_upto(n, b)]
    else:
        sets = [frozenset(A) for A in _subsets_upto(n, a)]
    if n <= GREEDY_UNIVERSE and drop * take <= GREEDY_DEMANDS:
        greedy = _greedy(n, a, b)
        if len(greedy) < len(sets):
            sets = greedy
    return SepFamily(n, a, b, tuple(sets))


def enumerate_connected_sets(g: WeightedGraph, v: int, b: int, f: int) -> list[frozenset[int]]:
    """Connected sets B with v ∈ B, |B| = b+1 and |N(B)| = f.

    Branches on the lowest-id vertex of N(B) not yet excluded: either it
    joins B or it is excluded for good.  Excluded neighbours stay in N(B), so
    a branch dies once more than f of them have accumulated.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"unknown vertex {v}")
    adj = [set(g.neighbors(x)) for x in range(g.n)]
    out: list[frozenset[int]] = []

    def nbhd(s):
        acc = set()
        for x in s:
            acc |= adj[x]
        return acc - s

    def rec(s: set, excl: set):
        nb = nbhd(s)
        if len(nb & excl) > f:
            return
        if len(s) == b + 1:
            if len(nb) == f:
                out.append(frozenset(s))
            return
        free = sorted(nb - excl)
        if not free:
            return
        u = free[0]
        rec(s | {u}, excl)
        rec(s, excl | {u})

    rec({v}, set())
    out.sort(key=lambda s: sorted(s))
    return out


def connected_sets_upto(g: WeightedGraph, v: int, max_size: int, max_boundary: int) -> list[frozenset[int]]:
    """Connected sets containing v with at most ``max_size`` vertices and at
    most ``max_boundary`` outside neighbours."""
    out = []
    for b in range(max(max_size, 0)):
        for f in range(max_boundary + 1):
            out.extend(enumerate_connected_sets(g, v, b, f))
    return out


def bfs_bound(r: int) -> int:
    """Largest vertex count an r-restricted BFS subgraph can reach."""
    if r <= 0:
        return 1
    if r == 1:
        return 2
    return (r ** (r + 1) - 1) // (r - 1)


@dataclass(frozen=True)
class RestrictedBfsResult:
    subgraph: WeightedGraph
    vertices: tuple[int, ...]
    labels: dict

    def __len__(self) -> int:
        return len(self.vertices)


def restricted_bfs(g: WeightedGraph, u: int, r: int) -> RestrictedBfsResult:
    """BFS from u where each dequeued vertex of label <= r-1 looks at its
    min(r, deg) lowest-id neighbours and labels the unlabelled ones."""
    if r < 1:
        raise CgwcError("r must be at least 1")
    if not 0 <= u < g.n:
        raise GraphError(f"unknown vertex {u}")
    labels = {u: 0}
    queue = [u]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        if labels[x] > r - 1:
            continue
        for y in g.neighbors(x)[:r]:
            if y not in labels:
                labels[y] = labels[x] + 1
                queue.append(y)
    verts = tuple(sorted(labels))
    sub, _ = g.induced(verts)
    return RestrictedBfsResult(sub, verts, labels)
