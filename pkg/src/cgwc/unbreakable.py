"""Solver for connected graphs in which every cut of weight <= 2k leaves one
side with at most q vertices.

In such a graph any solution has one big component (more than q vertices)
and at most q vertices elsewhere.  For each candidate constraint of the big
component the solver either reads the big component off the (k+1)-classes
or guesses a set S inside it from a separating family, grows S with
reduction rules, and assembles the small components by dynamic programming
over the pieces of G - S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .bruteforce import brute_force
from .connectivity import alpha_classes, certify, connectivity, separator_weight
from .graph import (
    INF,
    BoundariedGraph,
    CgwcError,
    ConnSpec,
    Edge,
    GraphError,
    Solution,
    WeightedGraph,
    boundary_sum_ids,
    norm_edge,
)
from .mimick import DEFAULT_LABELED_CAP, DEFAULT_VERTEX_CAP, enumerate_family
from .septools import bfs_bound, connected_sets_upto, universal_family


@dataclass(frozen=True)
class AnnotatedInstance:
    graph: WeightedGraph
    allowed: frozenset
    spec: ConnSpec
    budget: int

    def __post_init__(self) -> None:
        allowed = frozenset(norm_edge(*e) for e in self.allowed)
        if not allowed <= self.graph.edge_set:
            raise GraphError("allowed edges must belong to the graph")
        if self.budget < 0:
            raise CgwcError("budget must be nonnegative")
        object.__setattr__(self, "allowed", allowed)


@dataclass(frozen=True)
class GoodSetState:
    s_set: frozenset
    components: tuple[tuple[int, ...], ...]
    index_set: tuple[int, ...]


def _restrict(allowed: frozenset, old: tuple[int, ...]) -> frozenset:
    """Allowed edges of an induced subgraph, in its own ids."""
    pos = {v: i for i, v in enumerate(old)}
    return frozenset(
        (pos[u], pos[v]) for u, v in allowed if u in pos and v in pos
    )


def _lift(edges: Iterable[Edge], old: tuple[int, ...]) -> set:
    return {norm_edge(old[u], old[v]) for u, v in edges}


def _outside_components(g: WeightedGraph, s: set) -> list[tuple[int, ...]]:
    rest = [v for v in range(g.n) if v not in s]
    if not rest:
        return []
    sub, old = g.induced(rest)
    return [tuple(old[v] for v in c) for c in sub.components()]


def _spec_values(spec: ConnSpec) -> list:
    out = []
    for x in spec:
        if x not in out:
            out.append(x)
    return out


# -- annotated solver --------------------------------------------------------

def _solve_annotated(inst: AnnotatedInstance, q) -> tuple[Optional[frozenset], bool]:
    """Returns (F or None, whether F is known to have minimum weight)."""
    g, L, spec, k = inst.graph, inst.allowed, inst.spec, inst.budget
    t = len(spec)
    if g.n == 0:
        return (frozenset() if t == 0 else None), True
    if not g.is_connected():
        raise GraphError("annotated solver needs a connected graph")
    if t == 0 or t > k + 1:
        return None, True
    if t == 1:
        return (frozenset() if connectivity(g) >= spec[0] else None), True
    if g.n <= 3 * q:
        f = brute_force(g, L, spec, k)
        return (None if f is None else frozenset(f)), True
    for lam in _spec_values(spec):
        rest = spec.remove_one(lam)
        if lam > k:
            f = _route_alpha(g, L, lam, rest, k, q)
            if f is not None and certify(g, f, spec, k, L):
                return frozenset(f), False
        else:
            for f in _route_good_sets(g, L, lam, rest, k, q):
                if certify(g, f, spec, k, L):
                    return frozenset(f), False
    return None, True


def solve_annotated_unbreakable(inst: AnnotatedInstance, q) -> Optional[Solution]:
    """Solution for a connected (q, 2k)-unbreakable instance, or None."""
    f, _ = _solve_annotated(inst, q)
    if f is None:
        return None
    sol = certify(inst.graph, f, inst.spec, inst.budget, inst.allowed)
    if sol is None:
        raise CgwcError("internal: annotated solver produced an invalid witness")
    return sol


def _route_alpha(g, L, lam, rest: ConnSpec, k: int, q) -> Optional[set]:
    # the big component has connectivity > k, so it is one (k+1)-class
    for X in alpha_classes(g, k + 1):
        if len(X) < q + 1 or g.n - len(X) > q or len(X) == g.n:
            continue
        sub, _ = g.induced(X)
        if not sub.is_connected() or connectivity(sub) < lam:
            continue
        others = [v for v in range(g.n) if v not in set(X)]
        cut = {norm_edge(u, v) for u, v in g.cut_edges(X, others)}
        wc = g.weight_of(cut)
        if not cut <= L or wc > k:
            continue
        small, old = g.induced(others)
        f2 = brute_force(small, _restrict(L, old), rest, k - wc)
        if f2 is not None:
            return cut | _lift(f2, old)
    return None


def _route_good_sets(g, L, lam, rest: ConnSpec, k: int, q):
    a = min(g.n, k * bfs_bound(q + lam))
    b = min(g.n, q)
    for s0 in universal_family(g.n, a, b).sets:
        state = grow_good_set(g, L, lam, q, k, s0)
        if state is None:
            continue
        f = dp_compose(g, L, state, rest, k)
        if f is not None:
            yield f


# -- good-set growth ---------------------------------------------------------

def _weak_vertices(g: WeightedGraph, s: set, lam, q) -> set:
    """Vertices u of S lying in a connected Z ⊆ S with |Z| <= q and
    w(Z, S minus Z) <= lam - 1."""
    sub, old = g.induced(s)
    weak = set()
    for u in range(sub.n):
        if old[u] in weak:
            continue
        for z in connected_sets_upto(sub, u, q, lam - 1):
            if sub.cut_weight(z, [v for v in range(sub.n) if v not in z]) <= lam - 1:
                weak.add(old[u])
                break
    return weak


def grow_good_set(g: WeightedGraph, allowed, lambda_i, q, k: int, s0) -> Optional[GoodSetState]:
    """Apply the five growth rules to s0; None means s0 is discarded."""
    L = allowed if isinstance(allowed, frozenset) else frozenset(norm_edge(*e) for e in allowed)
    s = set(s0)
    if len(s) <= q:
        return None
    # absorb pieces that cannot be cut away
    grow = set()
    for h in _outside_components(g, s):
        cut = {norm_edge(u, v) for u, v in g.cut_edges(h, s)}
        if not cut <= L or g.weight_of(cut) >= k + 1 or len(h) > q:
            grow.update(h)
    s |= grow
    # absorb pieces touching a weakly attached part of S, to a fixpoint
    changed = True
    while changed:
        changed = False
        weak = _weak_vertices(g, s, lambda_i, q)
        if not weak:
            break
        for h in _outside_components(g, s):
            touch = {u for v in h for u in g.neighbors(v) if u in s}
            if touch & weak:
                s.update(h)
                changed = True
                break
    # a small connected part of S with a cheap boundary rules S out
    sub, old = g.induced(s)
    for u in range(sub.n):
        for z in connected_sets_upto(sub, u, q, lambda_i - 1):
            zs = {old[v] for v in z}
            if g.cut_weight(zs, [v for v in range(g.n) if v not in zs]) <= lambda_i - 1:
                return None
    comps = _outside_components(g, s)
    sl = sorted(s)
    index = tuple(
        j for j, h in enumerate(comps)
        if any(separator_weight(g, (v,), sl) < lambda_i for v in h)
    )
    union = [v for j in index for v in comps[j]]
    if len(union) > q or g.cut_weight(union, s) > k:
        return None
    return GoodSetState(frozenset(s), tuple(comps), index)


# -- dynamic program -------------------------------------------------------

def _piece_table(g, L, s, piece, subs, k, first: bool):
    """Minimum-weight way to detach ``piece`` from S and split it per sub-spec."""
    table = {}
    empty = ConnSpec()
    if not piece:
        table[empty] = (0, frozenset())
        return table
    if not first:
        table[empty] = (0, frozenset())
    cut = {norm_edge(u, v) for u, v in g.cut_edges(piece, s)}
    wc = g.weight_of(cut)
    if not cut <= L or wc > k:
        return table
    sub, old = g.induced(piece)
    Ls = _restrict(L, old)
    for spec in subs:
        if not len(spec):
            continue
        f = brute_force(sub, Ls, spec, k - wc)
        if f is not None:
            inner = _lift(f, old)
            table[spec] = (wc + g.weight_of(inner), frozenset(cut | inner))
    return table


def dp_compose(g: WeightedGraph, allowed, state: GoodSetState, spec_rest: ConnSpec, k: int
               ) -> Optional[frozenset]:
    """Deletion set detaching the small components from the big one, or None."""
    L = allowed if isinstance(allowed, frozenset) else frozenset(norm_edge(*e) for e in allowed)
    s = set(state.s_set)
    q0 = tuple(sorted(v for j in state.index_set for v in state.components[j]))
    pieces = [q0] + [c for j, c in enumerate(state.components) if j not in state.index_set]
    subs = spec_rest.sub_specs(include_empty=True)
    acc = _piece_table(g, L, s, pieces[0], subs, k, first=True)
    for piece in pieces[1:]:
        f = _piece_table(g, L, s, piece, subs, k, first=False)
        nxt = {}
        for target in subs:
            best = None
            for left in target.sub_specs(include_empty=True):
                right = target.minus(left)
                if left in acc and right in f:
                    w = acc[left][0] + f[right][0]
                    if w <= k and (best is None or w < best[0]):
                        best = (w, acc[left][1] | f[right][1])
            if best is not None:
                nxt[target] = best
        acc = nxt
    if spec_rest not in acc:
        return None
    F = acc[spec_rest][1]
    check_dp_witness(g, L, state, pieces, spec_rest, k, F)
    return F


def check_dp_witness(g, L, state: GoodSetState, pieces, spec_rest: ConnSpec, k: int, F) -> None:
    """Post-hoc check of the DP's output characterization.

    F ⊆ L, w(F) <= k and G - F consists of one component G' holding all of
    S plus |spec_rest| others; Q_0 avoids G', every other piece lies wholly
    inside or outside G', and the other components dominate spec_rest.
    The big component's own connectivity is left to the final recheck.
    """
    if not F <= L or g.weight_of(F) > k:
        raise CgwcError("internal: DP witness outside L or over budget")
    comps = g.remove_edges(F).components()
    s = state.s_set
    home = [c for c in comps if set(c) & s]
    if len(home) != 1 or not s <= set(home[0]):
        raise CgwcError("internal: DP witness splits S")
    big = set(home[0])
    if big & set(pieces[0]):
        raise CgwcError("internal: DP witness keeps Q_0 in the big component")
    for piece in pieces[1:]:
        inside = big & set(piece)
        if inside and len(inside) != len(piece):
            raise CgwcError("internal: DP witness splits a piece across the big component")
    small = [c for c in comps if c is not home[0]]
    prof = []
    for c in small:
        sub, _ = g.remove_edges(F).induced(c)
        prof.append(INF if sub.n == 1 else connectivity(sub))
    if len(prof) != len(spec_rest) or not all(a <= b for a, b in zip(spec_rest, sorted(prof))):
        raise CgwcError("internal: DP witness misses the small-component spec")


# -- bordered variant ---------------------------------------------------------

@dataclass(frozen=True)
class TableEntry:
    khat: int
    edges: frozenset


@dataclass
class BorderedTable:
    """Minimum budget and a witness for every (completion, sub-spec) pair.

    Entries are computed on first access.  Witness edges use the ids of the
    bordered graph (the completion only adds vertices).
    """

    graph: BoundariedGraph
    spec: ConnSpec
    budget: int
    members: list
    compute: Callable[[int, ConnSpec], Optional[TableEntry]]
    _cache: dict = field(default_factory=dict)

    @property
    def sub_specs(self) -> list[ConnSpec]:
        return self.spec.sub_specs(include_empty=True)

    def entry(self, member: int, sub: ConnSpec) -> Optional[TableEntry]:
        if not len(sub):
            return None
        key = (member, sub)
        if key not in self._cache:
            self._cache[key] = self.compute(member, sub)
        return self._cache[key]

    def entries(self):
        for i in range(len(self.members)):
            for sub in self.sub_specs:
                yield i, sub, self.entry(i, sub)

    def witness_union(self) -> frozenset:
        out = set()
        for _, _, e in self.entries():
            if e is not None:
                out |= e.edges
        return frozenset(out)


def _check_bordered(bg: BoundariedGraph, spec: ConnSpec, k: int) -> None:
    if not bg.graph.is_connected():
        raise GraphError("bordered solver needs a connected graph")
    if bg.r > 4 * k:
        raise CgwcError(f"boundary size {bg.r} exceeds 4k = {4 * k}")
    if len(spec) > k + 1:
        raise CgwcError("spec longer than k+1")


def min_budget_entry(glued: WeightedGraph, allowed: frozenset, sub: ConnSpec, k: int, q
                     ) -> Optional[TableEntry]:
    """Least k̂ <= k admitting a solution, with a witness."""
    f, exact = _solve_annotated(AnnotatedInstance(glued, allowed, sub, k), q)
    if f is None:
        return None
    w = glued.weight_of(f)
    if not exact:
        for kh in range(w):
            f2, _ = _solve_annotated(AnnotatedInstance(glued, allowed, sub, kh), q)
            if f2 is not None:
                return TableEntry(kh, f2)
    return TableEntry(w, f)


def family_for(r: int, k: int, cap: int = DEFAULT_VERTEX_CAP, labeled_cap: int = DEFAULT_LABELED_CAP):
    return enumerate_family(r, max(2 * k, 1), cap, labeled_cap)


def solve_bordered_unbreakable(bg: BoundariedGraph, allowed, spec: ConnSpec, k: int, q, *,
                               family_cap: int = DEFAULT_VERTEX_CAP,
                               labeled_cap: int = DEFAULT_LABELED_CAP) -> BorderedTable:
    """Table over completions for a connected (q, 2k)-unbreakable boundaried
    graph; each glued instance is solved with q + |V(H)|."""
    _check_bordered(bg, spec, k)
    L = frozenset(norm_edge(*e) for e in allowed)
    members = family_for(bg.r, k, family_cap, labeled_cap)

    def compute(i: int, sub: ConnSpec) -> Optional[TableEntry]:
        h = members[i]
        glued, _ = boundary_sum_ids(bg, h)
        return min_budget_entry(glued, L, sub, k, q + h.graph.n)

    return BorderedTable(bg, spec, k, members, compute)


def brute_force_bordered(bg: BoundariedGraph, allowed, spec: ConnSpec, k: int, members
                         ) -> BorderedTable:
    """The same table filled by exhaustive search over the allowed edges."""
    L = frozenset(norm_edge(*e) for e in allowed)

    def compute(i: int, sub: ConnSpec) -> Optional[TableEntry]:
        glued, _ = boundary_sum_ids(bg, members[i])
        f = brute_force(glued, L, sub, k)
        if f is None:
            return None
        return TableEntry(glued.weight_of(f), frozenset(f))

    return BorderedTable(bg, spec, k, members, compute)
