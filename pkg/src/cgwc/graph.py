"""Weighted graphs, boundaried graphs and connectivity tuples.

Vertices are dense ids ``0..n-1``.  Edges are stored once as ``(u, v, w)``
with ``u < v``, sorted, which makes a graph hashable and usable as a cache key.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

INF = math.inf
# largest total edge weight accepted; keeps every kernel sum clear of the
# BIG sentinel used for +inf inside numba code
MAX_TOTAL_WEIGHT = 1 << 60

Edge = tuple[int, int]


class CgwcError(ValueError):
    """Base class for invalid inputs."""


class GraphError(CgwcError):
    pass


class SpecError(CgwcError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "WeightedGraph":
        """Validated constructor; accepts ``(u, v)`` or ``(u, v, w)`` items."""
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise GraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        n = int(n)
        seen: dict[Edge, int] = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                w = 1
            elif len(item) == 3:
                u, v, w = item
            else:
                raise GraphError(f"bad edge {item!r}")
            for x in (u, v):
                if not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                    raise GraphError(f"unknown vertex {x!r} in edge {item!r}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not isinstance(w, (int, np.integer)) or isinstance(w, bool) or w < 1:
                raise GraphError(f"edge weight must be a positive integer, got {w!r}")
            e = norm_edge(int(u), int(v))
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen[e] = int(w)
        if sum(seen.values()) >= MAX_TOTAL_WEIGHT:
            raise GraphError("total edge weight too large")
        return cls(n, tuple(sorted((u, v, w) for (u, v), w in seen.items())))

    @classmethod
    def from_matrix(cls, mat) -> "WeightedGraph":
        mat = np.asarray(mat)
        n = mat.shape[0]
        iu, iv = np.nonzero(np.triu(mat, 1))
        return cls(n, tuple((int(u), int(v), int(mat[u, v])) for u, v in zip(iu, iv)))

    # -- basic views -------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v, w in self.edges:
            mat[u, v] = mat[v, u] = w
        mat.setflags(write=False)
        return mat

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.edges:
            z = np.zeros(0, dtype=np.int64)
            return z, z.copy(), z.copy()
        arr = np.array(self.edges, dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def weight(self, u: int, v: int) -> int:
        i = self.edge_index.get(norm_edge(u, v))
        return 0 if i is None else self.edges[i][2]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    def weight_of(self, edges: Iterable[Edge]) -> int:
        return sum(self.edges[self.edge_index[norm_edge(*e)]][2] for e in edges)

    def cut_edges(self, a: Iterable[int], b: Iterable[int]) -> list[Edge]:
        """E(A, B) as sorted pairs."""
        sa, sb = set(a), set(b)
        return [(u, v) for u, v, _ in self.edges if (u in sa and v in sb) or (u in sb and v in sa)]

    def cut_weight(self, a: Iterable[int], b: Iterable[int]) -> int:
        """w(A, B)."""
        sa, sb = set(a), set(b)
        return sum(w for u, v, w in self.edges if (u in sa and v in sb) or (u in sb and v in sa))

    # -- derived graphs ----------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["WeightedGraph", tuple[int, ...]]:
        """G[X] with fresh ids; returns the graph and the old id of each new vertex."""
        old = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(old)}
        edges = tuple(
            (pos[u], pos[v], w) for u, v, w in self.edges if u in pos and v in pos
        )
        return WeightedGraph(len(old), edges), old

    def remove_edges(self, f: Iterable[Edge]) -> "WeightedGraph":
        drop = {norm_edge(*e) for e in f}
        return WeightedGraph(self.n, tuple(e for e in self.edges if (e[0], e[1]) not in drop))

    def with_edges(self, keep: Iterable[Edge]) -> "WeightedGraph":
        """Same vertex set, only the listed edges."""
        keep = {norm_edge(*e) for e in keep}
        return WeightedGraph(self.n, tuple(e for e in self.edges if (e[0], e[1]) in keep))

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, ordered by lowest vertex."""
        return list(self._components)

    @cached_property
    def _components(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return tuple(tuple(g) for g in sorted(groups.values()))

    def is_connected(self) -> bool:
        return self.n > 0 and len(self._components) == 1

    def truncated(self, p: float) -> "WeightedGraph":
        """Every weight above p replaced by p."""
        if p == INF:
            return self
        p = int(p)
        return WeightedGraph(self.n, tuple((u, v, min(w, p)) for u, v, w in self.edges))

    def relabel(self, perm: Sequence[int]) -> "WeightedGraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return WeightedGraph(
            self.n,
            tuple(sorted((*norm_edge(perm[u], perm[v]), w) for u, v, w in self.edges)),
        )


def contract_partition(g: WeightedGraph, blocks: Sequence[Iterable[int]]) -> WeightedGraph:
    """Contract every block to one vertex (vertex ``i`` of the result is block ``i``).

    Edges inside a block vanish; parallel edges are merged by summing weights.
    """
    owner = [-1] * g.n
    for i, blk in enumerate(blocks):
        for v in blk:
            if not 0 <= v < g.n:
                raise GraphError(f"unknown vertex {v}")
            if owner[v] != -1:
                raise GraphError(f"vertex {v} in two blocks")
            owner[v] = i
    if -1 in owner:
        raise GraphError("blocks do not cover the vertex set")
    acc: dict[Edge, int] = {}
    for u, v, w in g.edges:
        a, b = owner[u], owner[v]
        if a != b:
            e = norm_edge(a, b)
            acc[e] = acc.get(e, 0) + w
    return WeightedGraph(len(blocks), tuple(sorted((u, v, w) for (u, v), w in acc.items())))


def contract_set(g: WeightedGraph, u_set: Iterable[int]) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Replace ``u_set`` by one vertex carrying the summed weights.

    Returns the contracted graph and ``mapping`` with ``mapping[old] = new``.
    The merged vertex takes the slot of the smallest member of ``u_set``;
    the other vertices keep their relative order.
    """
    u = set(u_set)
    if not u:
        raise GraphError("cannot contract an empty vertex set")
    bad = [v for v in u if not (isinstance(v, (int, np.integer)) and 0 <= v < g.n)]
    if bad:
        raise GraphError(f"unknown vertex {bad[0]!r}")
    rep = min(u)
    blocks: list[list[int]] = []
    mapping = [0] * g.n
    for v in range(g.n):
        if v in u and v != rep:
            continue
        blk = sorted(u) if v == rep else [v]
        for x in blk:
            mapping[x] = len(blocks)
        blocks.append(blk)
    return contract_partition(g, blocks), tuple(mapping)


@dataclass(frozen=True)
class BoundariedGraph:
    graph: WeightedGraph
    boundary: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        b = tuple(int(x) for x in self.boundary)
        object.__setattr__(self, "boundary", b)
        if len(set(b)) != len(b):
            raise GraphError("boundary vertices must be distinct")
        for x in b:
            if not 0 <= x < self.graph.n:
                raise GraphError(f"boundary vertex {x} not in graph")

    @property
    def r(self) -> int:
        return len(self.boundary)


def is_properly_boundaried(h: BoundariedGraph) -> bool:
    """Boundary independent and every component touches the boundary."""
    g, x = h.graph, h.boundary
    xs = set(x)
    for i, a in enumerate(x):
        for b in x[i + 1:]:
            if g.has_edge(a, b):
                return False
    return all(xs.intersection(c) for c in g.components())


def boundary_sum_ids(f: BoundariedGraph, h: BoundariedGraph) -> tuple[WeightedGraph, tuple[int, ...]]:
    """Glue ``h`` onto ``f`` along the boundaries.

    ``f`` keeps its ids; the non-boundary vertices of ``h`` are appended in id
    order.  Returns the glued graph and the new id of every ``h`` vertex.
    """
    if f.r != h.r:
        raise GraphError(f"boundary lengths differ ({f.r} vs {h.r})")
    if not is_properly_boundaried(h):
        raise GraphError("second operand must be properly boundaried")
    hmap = [-1] * h.graph.n
    for xf, xh in zip(f.boundary, h.boundary):
        hmap[xh] = xf
    nxt = f.graph.n
    for v in range(h.graph.n):
        if hmap[v] == -1:
            hmap[v] = nxt
            nxt += 1
    edges = list(f.graph.edges)
    for u, v, w in h.graph.edges:
        edges.append((*norm_edge(hmap[u], hmap[v]), w))
    return WeightedGraph(nxt, tuple(sorted(edges))), tuple(hmap)


def boundary_sum(f: BoundariedGraph, h: BoundariedGraph) -> WeightedGraph:
    return boundary_sum_ids(f, h)[0]


# -- connectivity tuples ----------------------------------------------------

def _check_entry(x) -> float | int:
    if x == INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or x < 1:
        if isinstance(x, float) and x.is_integer() and x >= 1:
            return int(x)
        raise SpecError(f"connectivity entries must be positive integers or inf, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class ConnSpec:
    entries: tuple = ()

    def __post_init__(self) -> None:
        e = tuple(_check_entry(x) for x in self.entries)
        if any(a > b for a, b in zip(e, e[1:])):
            raise SpecError(f"spec must be nondecreasing, got {list(e)}")
        object.__setattr__(self, "entries", e)

    @classmethod
    def of(cls, values: Iterable) -> "ConnSpec":
        """Build from unsorted values."""
        return cls(tuple(sorted(_check_entry(x) for x in values)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "ConnSpec") -> "ConnSpec":
        return spec_merge(self, other)

    def replicate(self, r: int) -> "ConnSpec":
        """r copies merged together."""
        out = ConnSpec()
        for _ in range(r):
            out = out + self
        return out

    def precedes(self, other: "ConnSpec") -> bool:
        return spec_precedes(self, other)

    def variate(self) -> frozenset:
        return spec_variate(self)

    def remove_one(self, value) -> "ConnSpec":
        e = list(self.entries)
        e.remove(value)
        return ConnSpec(tuple(e))

    def minus(self, other: "ConnSpec") -> "ConnSpec":
        """Multiset difference; ``other`` must be a subtuple."""
        e = list(self.entries)
        for x in other.entries:
            if x not in e:
                raise SpecError(f"{other} is not a subtuple of {self}")
            e.remove(x)
        return ConnSpec(tuple(e))

    def sub_specs(self, include_empty: bool = False) -> list["ConnSpec"]:
        """Distinct multiset subtuples, shortest first then lexicographic."""
        vals = sorted(set(self.entries))
        counts = [self.entries.count(v) for v in vals]
        out = []
        for choice in itertools.product(*(range(c + 1) for c in counts)):
            sub = tuple(v for v, c in zip(vals, choice) for _ in range(c))
            if sub or include_empty:
                out.append(ConnSpec(sub))
        out.sort(key=lambda s: (len(s), s.entries))
        return out

    def __str__(self) -> str:
        return "<" + ",".join(format_value(x) for x in self.entries) + ">"


def format_value(x) -> str:
    return "inf" if x == INF else str(int(x))


def spec_merge(a: ConnSpec, b: ConnSpec) -> ConnSpec:
    return ConnSpec(tuple(sorted(a.entries + b.entries)))


def spec_precedes(a: ConnSpec, b: ConnSpec) -> bool:
    """a ⪯ b: componentwise <= on equal-length sorted tuples."""
    if len(a) != len(b):
        raise SpecError(f"length mismatch ({len(a)} vs {len(b)})")
    return all(x <= y for x, y in zip(a.entries, b.entries))


def spec_variate(a: ConnSpec) -> frozenset:
    return frozenset(a.entries)


def dominates(profile: Sequence, spec: ConnSpec) -> bool:
    """Sorted ``profile`` has the spec's length and dominates it."""
    return len(profile) == len(spec) and all(
        x <= y for x, y in zip(spec.entries, sorted(profile))
    )


@dataclass(frozen=True)
class Solution:
    """Deletion set plus the certificate it induces."""

    edges: frozenset = field(default_factory=frozenset)
    total_weight: int = 0
    components: tuple = ()  # ((vertices...), connectivity) in vertex order

    @property
    def profile(self) -> tuple:
        return tuple(sorted(c for _, c in self.components))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)
