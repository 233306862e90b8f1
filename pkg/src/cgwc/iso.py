"""Canonical forms and isomorphism-free enumeration of small graphs.

Canonical labelling uses colour refinement followed by exhaustive search
over orderings consistent with the refined cells (individualizing a vertex
whenever the remaining cell permutations exceed a small budget).  A prefix of
``fixed`` vertices keeps its order, which is how boundary tuples are handled.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .graph import WeightedGraph

_BRUTE_LIMIT = 5040


def refine(wmat: np.ndarray, colors: Sequence[int]) -> list[int]:
    """Colour refinement; returns canonical colour ids (0..c-1)."""
    n = wmat.shape[0]
    col = list(colors)
    ncol = len(set(col))
    nbrs = [[(u, int(wmat[v, u])) for u in range(n) if wmat[v, u]] for v in range(n)]
    while True:
        sig = [(col[v], tuple(sorted((col[u], w) for u, w in nbrs[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == ncol:
            return new
        col, ncol = new, len(ranks)


def _cells(col: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def _orders_of(cells: list[list[int]]) -> np.ndarray:
    parts = [list(itertools.permutations(c)) for c in cells]
    rows = [sum(choice, ()) for choice in itertools.product(*parts)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def _leaf_orders(wmat: np.ndarray, col: list[int]) -> list[np.ndarray]:
    cells = _cells(col)
    size = math.prod(math.factorial(len(c)) for c in cells)
    if size <= _BRUTE_LIMIT:
        return [_orders_of(cells)]
    target = next(c for c in cells if len(c) > 1)
    out = []
    for v in target:
        # give v a colour just below the rest of its cell
        c2 = [2 * c + 1 for c in col]
        c2[v] -= 1
        out.extend(_leaf_orders(wmat, refine(wmat, c2)))
    return out


def _initial_colors(n: int, fixed: int) -> list[int]:
    return [i if i < fixed else fixed for i in range(n)]


def _codes(wmat: np.ndarray, orders: np.ndarray) -> np.ndarray:
    n = wmat.shape[0]
    iu, iv = np.triu_indices(n, 1)
    return wmat[orders[:, iu], orders[:, iv]]


def canonical_orders(wmat: np.ndarray, fixed: int = 0) -> tuple[bytes, np.ndarray]:
    """Return ``(code, orders)``: the canonical code and every vertex order
    realizing it (``order[i]`` is the old vertex placed at position ``i``)."""
    n = wmat.shape[0]
    if n == 0:
        return b"", np.zeros((1, 0), dtype=np.int64)
    col = refine(wmat, _initial_colors(n, fixed))
    best = None
    best_orders: list[np.ndarray] = []
    for orders in _leaf_orders(wmat, col):
        codes = _codes(wmat, orders)
        if codes.shape[1] == 0:
            key: tuple = ()
            sel = orders
        else:
            idx = np.lexsort(codes.T[::-1])
            first = codes[idx[0]]
            key = tuple(first.tolist())
            sel = orders[np.all(codes == first, axis=1)]
        if best is None or key < best:
            best, best_orders = key, [sel]
        elif key == best:
            best_orders.append(sel)
    code = np.asarray(best, dtype=np.int64).tobytes()
    return code, np.concatenate(best_orders)


def canonical_code(wmat: np.ndarray, fixed: int = 0) -> bytes:
    n = wmat.shape[0]
    return n.to_bytes(2, "little") + fixed.to_bytes(2, "little") + canonical_orders(wmat, fixed)[0]


def automorphisms(wmat: np.ndarray, fixed: int = 0) -> np.ndarray:
    """All automorphisms fixing the first ``fixed`` vertices, as rows
    ``perm`` with ``perm[v]`` the image of ``v``."""
    _, orders = canonical_orders(wmat, fixed)
    n = wmat.shape[0]
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    base = orders[0]
    # orders o and base give the same matrix, so o[i] -> base[i] is an automorphism
    auts = np.empty_like(orders)
    for j, o in enumerate(orders):
        perm = np.empty(n, dtype=np.int64)
        perm[o] = base
        auts[j] = perm
    return np.unique(auts, axis=0)


def canonical_graph(g: WeightedGraph, fixed: int = 0) -> tuple[WeightedGraph, np.ndarray]:
    """Relabel ``g`` canonically; returns the graph and ``perm`` old -> new."""
    _, orders = canonical_orders(np.asarray(g.matrix), fixed)
    order = orders[0]
    perm = np.empty(g.n, dtype=np.int64)
    perm[order] = np.arange(g.n)
    return g.relabel([int(x) for x in perm]), perm


# -- enumeration -------------------------------------------------------------

def _mat_from_mask(n: int, mask: int) -> np.ndarray:
    mat = np.zeros((n, n), dtype=np.int64)
    iu, iv = np.triu_indices(n, 1)
    bits = np.array([(mask >> i) & 1 for i in range(len(iu))], dtype=np.int64)
    mat[iu, iv] = bits
    mat[iv, iu] = bits
    return mat


@lru_cache(maxsize=None)
def unweighted_graphs(n: int) -> tuple[WeightedGraph, ...]:
    """All simple graphs on exactly ``n`` vertices up to isomorphism
    (unit weights), in a deterministic order."""
    if n <= 1:
        return (WeightedGraph(n),)
    prev = unweighted_graphs(n - 1)
    found: dict[bytes, WeightedGraph] = {}
    for g in prev:
        base = np.asarray(g.matrix)
        auts = automorphisms(base) if g.n else np.zeros((1, 0), dtype=np.int64)
        # one neighbourhood per orbit of Aut(g) on vertex subsets
        subsets = np.arange(1 << (n - 1), dtype=np.int64)
        best = subsets.copy()
        for perm in auts:
            img = np.zeros_like(subsets)
            for v in range(n - 1):
                img |= ((subsets >> v) & 1) << int(perm[v])
            best = np.minimum(best, img)
        for s in np.flatnonzero(best == subsets):
            mat = np.zeros((n, n), dtype=np.int64)
            mat[: n - 1, : n - 1] = base
            for v in range(n - 1):
                if (s >> v) & 1:
                    mat[v, n - 1] = mat[n - 1, v] = 1
            code = canonical_code(mat)
            if code not in found:
                found[code] = canonical_graph(WeightedGraph.from_matrix(mat))[0]
    return tuple(found[c] for c in sorted(found))


def _edge_perm(g: WeightedGraph, perm: np.ndarray) -> np.ndarray:
    idx = g.edge_index
    out = np.empty(g.m, dtype=np.int64)
    for i, (u, v, _) in enumerate(g.edges):
        a, b = int(perm[u]), int(perm[v])
        out[i] = idx[(a, b) if a < b else (b, a)]
    return out


def weightings(g: WeightedGraph, weight_set: Sequence[int], fixed: int = 0,
               auts: np.ndarray | None = None) -> list[WeightedGraph]:
    """One representative per orbit of weight assignments on the edges of
    ``g`` under its automorphisms (fixing the first ``fixed`` vertices)."""
    ws = sorted(set(int(w) for w in weight_set))
    if g.m == 0:
        return [g]
    if len(ws) == 1:
        return [WeightedGraph(g.n, tuple((u, v, ws[0]) for u, v, _ in g.edges))]
    if auts is None:
        auts = automorphisms(np.asarray(g.matrix), fixed)
    base = len(ws)
    m = g.m
    total = base ** m
    digits = np.empty((total, m), dtype=np.int64)
    codes = np.arange(total, dtype=np.int64)
    for i in range(m):
        digits[:, i] = (codes // base ** (m - 1 - i)) % base
    powers = base ** np.arange(m - 1, -1, -1, dtype=np.int64)
    best = codes.copy()
    for perm in auts:
        ep = _edge_perm(g, perm)
        moved = np.empty_like(digits)
        moved[:, ep] = digits
        best = np.minimum(best, moved @ powers)
    reps = np.flatnonzero(best == codes)
    out = []
    for c in reps:
        row = digits[c]
        out.append(WeightedGraph(g.n, tuple((u, v, ws[int(row[i])]) for i, (u, v, _) in enumerate(g.edges))))
    return out


@lru_cache(maxsize=None)
def weighted_graphs(n: int, weight_set: tuple[int, ...] = (1,), connected: bool | None = None) -> tuple[WeightedGraph, ...]:
    """All weighted graphs on exactly ``n`` vertices up to isomorphism.

    ``connected`` filters: True keeps connected graphs, False keeps
    disconnected ones, None keeps both.
    """
    out = []
    for g in unweighted_graphs(n):
        if connected is not None and g.is_connected() != connected:
            continue
        out.extend(weightings(g, weight_set))
    return tuple(out)


def iter_graphs(n_max: int, weight_set: tuple[int, ...] = (1,), n_min: int = 1,
                connected: bool | None = None) -> Iterator[WeightedGraph]:
    for n in range(n_min, n_max + 1):
        yield from weighted_graphs(n, tuple(sorted(set(weight_set))), connected)


def boundary_tuples(g: WeightedGraph, r: int, proper: bool = True) -> list[tuple[int, ...]]:
    """Ordered boundary tuples of length r, one per orbit under Aut(g).

    With ``proper`` the tuple must be independent and meet every component.
    """
    comps = g.components()
    cands = []
    for tup in itertools.permutations(range(g.n), r):
        if proper:
            if any(g.has_edge(a, b) for a, b in itertools.combinations(tup, 2)):
                continue
            if not all(set(c) & set(tup) for c in comps):
                continue
        cands.append(tup)
    if not cands:
        return []
    auts = automorphisms(np.asarray(g.matrix))
    seen = set()
    out = []
    for tup in cands:
        if tup in seen:
            continue
        out.append(tup)
        for perm in auts:
            seen.add(tuple(int(perm[v]) for v in tup))
    return out


def boundary_first(g: WeightedGraph, boundary: Sequence[int]) -> WeightedGraph:
    """Relabel so the boundary tuple occupies ids 0..r-1 in order."""
    rest = [v for v in range(g.n) if v not in set(boundary)]
    order = list(boundary) + rest
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)
