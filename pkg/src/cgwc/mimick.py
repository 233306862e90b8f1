"""Cut-reducing replacements for boundaried graphs and the completion family.

``cut_reduce`` works per component.  For every split {X, X̄} of the
component's boundary it takes a minimum (X, X̄)-separator, plus one
separator between the whole boundary and the interior vertex v* that is
cheapest to cut off.  The common refinement of those bipartitions (with
boundary vertices kept as singletons) is contracted, then weights are capped
at p.

``enumerate_family`` lists properly boundaried graphs with at most
2^(2^(r-1)) + r vertices and weights in 1..s, one per isomorphism class
(isomorphisms fix the boundary pointwise).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import iso
from .connectivity import min_separator, separator_weight
from .graph import (
    INF,
    BoundariedGraph,
    CgwcError,
    GraphError,
    WeightedGraph,
    contract_partition,
    is_properly_boundaried,
)

DEFAULT_VERTEX_CAP = 6
DEFAULT_LABELED_CAP = 1 << 18


class FamilyCapExceeded(CgwcError):
    pass


@dataclass(frozen=True)
class PartitionProduct:
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)


FamilyMember = BoundariedGraph


def size_bound(r: int) -> int:
    """Vertex bound 2^(2^(r-1)) + r for a reduced r-boundaried graph."""
    if r == 0:
        return 0
    return 2 ** (2 ** (r - 1)) + r


def _component_bipartitions(sub: WeightedGraph, xs: list[int]) -> list[tuple[bool, ...]]:
    sides = []
    first, rest = xs[0], xs[1:]
    # X always holds the first boundary vertex, so each unordered split appears once
    for size in range(len(rest)):
        for extra in itertools.combinations(rest, size):
            X = [first, *extra]
            Y = [v for v in rest if v not in extra]
            a_side, _ = min_separator(sub, X, Y).partition
            sa = set(a_side)
            sides.append(tuple(v in sa for v in range(sub.n)))
    interior = [v for v in range(sub.n) if v not in set(xs)]
    if interior:
        vstar = min(interior, key=lambda v: (separator_weight(sub, xs, (v,)), v))
        a_side, _ = min_separator(sub, xs, (vstar,)).partition
        sa = set(a_side)
        sides.append(tuple(v in sa for v in range(sub.n)))
    return sides


def reduction_blocks(h: BoundariedGraph) -> PartitionProduct:
    """The partition of V(h) that cut_reduce contracts, blocks ordered by
    lowest vertex."""
    if not is_properly_boundaried(h):
        raise GraphError("cut_reduce needs a properly boundaried graph")
    g = h.graph
    bset = set(h.boundary)
    blocks: list[tuple[int, ...]] = []
    for comp in g.components():
        sub, old = g.induced(comp)
        loc = {v: i for i, v in enumerate(old)}
        xs = [loc[x] for x in h.boundary if x in loc]
        sides = _component_bipartitions(sub, xs)
        groups: dict[tuple, list[int]] = {}
        for i, v in enumerate(old):
            if v in bset:
                blocks.append((v,))
            else:
                groups.setdefault(tuple(s[i] for s in sides), []).append(v)
        blocks.extend(tuple(b) for b in groups.values())
    blocks.sort()
    return PartitionProduct(tuple(blocks))


def reduce_with_blocks(h: BoundariedGraph, p) -> tuple[BoundariedGraph, PartitionProduct]:
    prod = reduction_blocks(h)
    g2 = contract_partition(h.graph, prod.blocks).truncated(p)
    where = {blk[0]: i for i, blk in enumerate(prod.blocks) if len(blk) == 1}
    return BoundariedGraph(g2, tuple(where[x] for x in h.boundary)), prod


def cut_reduce(h: BoundariedGraph, p=INF) -> BoundariedGraph:
    """Replacement for h that keeps every boundary-relevant cut value up to p."""
    if p != INF and p < 1:
        raise CgwcError("p must be positive or inf")
    return reduce_with_blocks(h, p)[0]


# -- family ------------------------------------------------------------------

def _is_member(g: WeightedGraph, r: int, s: int) -> bool:
    h = BoundariedGraph(g, tuple(range(r)))
    if not is_properly_boundaried(h):
        return False
    for comp in g.components():
        interior = [v for v in comp if v >= r]
        if not interior:
            continue
        sub, old = g.induced(comp)
        loc = {v: i for i, v in enumerate(old)}
        xs = [loc[v] for v in comp if v < r]
        if min(separator_weight(sub, xs, (loc[v],)) for v in interior) > s:
            return False
    return True


def _structures(r: int, n: int) -> list[WeightedGraph]:
    """Unit-weight properly r-boundaried graphs on n vertices, one per class."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if v >= r]
    found: dict[bytes, WeightedGraph] = {}
    for mask in range(1 << len(pairs)):
        edges = [(u, v, 1) for j, (u, v) in enumerate(pairs) if (mask >> j) & 1]
        g = WeightedGraph(n, tuple(edges))
        if not is_properly_boundaried(BoundariedGraph(g, tuple(range(r)))):
            continue
        code = iso.canonical_code(np.asarray(g.matrix), r)
        if code not in found:
            found[code] = g
    return [found[c] for c in sorted(found)]


def labeled_count(r: int, s: int, n_max: int) -> int:
    """Labelled weighted graphs (each pair absent or weighted 1..s) on up to
    n_max vertices; bounds the family size."""
    total = 0
    for n in range(max(r, 1), n_max + 1):
        pairs = n * (n - 1) // 2 - r * (r - 1) // 2
        total += (s + 1) ** pairs
    return total


@lru_cache(maxsize=32)
def _family(r: int, s: int, cap: int, labeled_cap: int) -> tuple[BoundariedGraph, ...]:
    if r == 0:
        return (BoundariedGraph(WeightedGraph(0), ()),)
    bound = size_bound(r)
    if bound > cap:
        raise FamilyCapExceeded(
            f"family for r={r} may need {bound} vertices (cap {cap}); raise the cap or shrink r"
        )
    if labeled_count(r, s, bound) > labeled_cap:
        raise FamilyCapExceeded(
            f"family for r={r}, s={s} spans {labeled_count(r, s, bound)} labelled graphs "
            f"(cap {labeled_cap}); raise labeled_cap"
        )
    out: list[BoundariedGraph] = []
    for n in range(r, bound + 1):
        for g in _structures(r, n):
            if s > 1 and g.m:
                auts = iso.automorphisms(np.asarray(g.matrix), r)
                options = iso.weightings(g, range(1, s + 1), r, auts)
            else:
                options = [g]
            for wg in options:
                if _is_member(wg, r, s):
                    out.append(BoundariedGraph(wg, tuple(range(r))))
    return tuple(out)


def enumerate_family(r: int, s: int, cap: int = DEFAULT_VERTEX_CAP,
                     labeled_cap: int = DEFAULT_LABELED_CAP) -> list[BoundariedGraph]:
    """Nonisomorphic properly r-boundaried graphs (boundary = 0..r-1) with
    weights in 1..s whose non-trivial components each hold a vertex v with
    λ(boundary, v) <= s."""
    if r < 0 or s < 1:
        raise CgwcError("need r >= 0 and s >= 1")
    return list(_family(r, s, cap, labeled_cap))
