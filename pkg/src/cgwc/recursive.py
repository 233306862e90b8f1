"""Recursive understanding for connected graphs.

While the graph has a (q, 2k)-good separation, the side A carrying at most
2k boundary vertices is solved on its own (as a boundaried graph whose
boundary adds the cut endpoints).  The union M of its witness sets is the
only part of A's deletable edges that can matter, so the deletable set
shrinks to (L minus E(A)) plus M.  Then A is replaced by a cut-equivalent
gadget glued along Z = endpoints(M) plus the new boundary, and the smaller
graph is solved in turn.  Graphs without a good separation go to the
unbreakable solver.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .connectivity import certify, connectivity
from .decomposition import GoodSeparation, find_good_separation
from .graph import (
    INF,
    BoundariedGraph,
    CgwcError,
    ConnSpec,
    GraphError,
    Solution,
    WeightedGraph,
    boundary_sum_ids,
    norm_edge,
)
from .mimick import (
    DEFAULT_LABELED_CAP,
    DEFAULT_VERTEX_CAP,
    FamilyCapExceeded,
    cut_reduce,
)
from .unbreakable import (
    BorderedTable,
    TableEntry,
    brute_force_bordered,
    family_for,
    solve_bordered_unbreakable,
)

# exponent sizes beyond which the documented constants are treated as +inf
_MAX_EXACT_BITS = 1 << 20


@lru_cache(maxsize=None)
def default_p(k: int):
    """p = (2k+1)^C(N,2) * 2k * 2^(2k+1) + 4k with N = 2^(2^(4k-1)) + 4k;
    +inf once it no longer fits comfortably in memory."""
    if k <= 0:
        return 0
    e = 2 ** (4 * k - 1)
    if e > 64:
        return INF
    n_big = 2 ** e + 4 * k
    pairs = comb(n_big, 2)
    if pairs * (2 * k + 1).bit_length() > _MAX_EXACT_BITS:
        return INF
    return (2 * k + 1) ** pairs * 2 * k * 2 ** (2 * k + 1) + 4 * k


@lru_cache(maxsize=None)
def default_q(k: int):
    """q = 2^(2^(p-1)) + p; +inf for every k >= 1 in practice."""
    p = default_p(k)
    if p == INF or p - 1 > 64:
        return INF
    if p == 0:
        return INF
    return 2 ** (2 ** (p - 1)) + p


@dataclass(frozen=True)
class RecursionConfig:
    """Constants of the recursion.  ``None`` selects the documented default.

    ``q_const`` drives the good-separation search.  ``p_const`` is the
    bound on |Z| the constants were derived from; it is reported but the
    search always uses cut weight 2k.  ``force_bruteforce_at`` is the side
    size solved by exhaustive search (default 2^q).
    """

    p_const: Optional[float] = None
    q_const: Optional[float] = None
    family_cap: int = DEFAULT_VERTEX_CAP
    labeled_cap: int = DEFAULT_LABELED_CAP
    force_bruteforce_at: Optional[float] = None
    oracle_check: bool = False
    seed: int = 0

    def p_value(self, k: int):
        return default_p(k) if self.p_const is None else self.p_const

    def q_value(self, k: int):
        return default_q(k) if self.q_const is None else self.q_const

    def brute_threshold(self, k: int):
        if self.force_bruteforce_at is not None:
            return self.force_bruteforce_at
        q = self.q_value(k)
        return INF if q == INF or q > 62 else 2 ** int(q)

    def echo(self, k: int) -> dict:
        def fmt(x):
            if x == INF:
                return "inf"
            x = int(x)
            return x if x.bit_length() <= 64 else f"~2^{x.bit_length()}"
        return {
            "p": fmt(self.p_value(k)),
            "q": fmt(self.q_value(k)),
            "family_cap": self.family_cap,
            "labeled_cap": self.labeled_cap,
            "force_bruteforce_at": fmt(self.brute_threshold(k)),
            "oracle_check": self.oracle_check,
        }


@dataclass
class RecursionStep:
    """One good-separation step, kept for inspection."""

    depth: int
    graph: WeightedGraph
    boundary: tuple[int, ...]
    allowed: frozenset
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    hat_boundary: tuple[int, ...]
    hat_allowed: frozenset
    witnesses: frozenset
    reduced_allowed: frozenset
    z: tuple[int, ...]
    reduced_graph: Optional[WeightedGraph] = None
    reduced_boundary: tuple[int, ...] = ()
    q_ids: tuple[int, ...] = ()
    fallback: str = ""


@dataclass
class RecursionTrace:
    steps: list = field(default_factory=list)
    leaves: list = field(default_factory=list)


def _map_table(table: BorderedTable, bg: BoundariedGraph, spec, k, back) -> BorderedTable:
    """Re-express witness edges through ``back`` (new id -> old id)."""

    def compute(i, sub):
        e = table.entry(i, sub)
        if e is None:
            return None
        return TableEntry(e.khat, frozenset(norm_edge(back[u], back[v]) for u, v in e.edges))

    return BorderedTable(bg, spec, k, table.members, compute)


def solve_bordered(bg: BoundariedGraph, allowed, spec: ConnSpec, k: int,
                   cfg: RecursionConfig = RecursionConfig(),
                   trace: Optional[RecursionTrace] = None, _depth: int = 0) -> BorderedTable:
    """Table of minimum budgets and witnesses for every completion in the
    family and every sub-spec, for a connected boundaried graph."""
    g, x = bg.graph, bg.boundary
    if not g.is_connected():
        raise GraphError("solve_bordered needs a connected graph")
    if bg.r > 4 * k:
        raise CgwcError(f"boundary size {bg.r} exceeds 4k = {4 * k}")
    L = frozenset(norm_edge(*e) for e in allowed)
    q = cfg.q_value(k)
    verdict = find_good_separation(g, q, 2 * k, seed=cfg.seed) if k >= 1 else None
    if not isinstance(verdict, GoodSeparation):
        q_out = INF if verdict is None else verdict.q_out
        if trace is not None:
            trace.leaves.append((_depth, g.n, bg.r))
        return solve_bordered_unbreakable(bg, L, spec, k, q_out,
                                          family_cap=cfg.family_cap, labeled_cap=cfg.labeled_cap)
    A, B = verdict.a, verdict.b
    xs = set(x)
    if len(set(A) & xs) > 2 * k:
        A, B = B, A
    sa = set(A)
    ends = {u for u, v in g.cut_edges(A, B)} | {v for u, v in g.cut_edges(A, B)}
    hat_x = tuple(sorted((sa & xs) | (ends & sa)))
    g_hat, old_a = g.induced(A)
    pos_a = {v: i for i, v in enumerate(old_a)}
    L_hat = frozenset(e for e in L if e[0] in sa and e[1] in sa)
    bg_hat = BoundariedGraph(g_hat, tuple(pos_a[v] for v in hat_x))
    L_hat_local = frozenset((pos_a[u], pos_a[v]) for u, v in L_hat)

    step = RecursionStep(_depth, g, x, L, tuple(A), tuple(B), hat_x, L_hat,
                         frozenset(), frozenset(), ())
    if trace is not None:
        trace.steps.append(step)

    # witnesses of the side problem
    try:
        if g_hat.n <= cfg.brute_threshold(k):
            members = family_for(bg_hat.r, k, cfg.family_cap, cfg.labeled_cap)
            table_hat = brute_force_bordered(bg_hat, L_hat_local, spec, k, members)
        else:
            table_hat = solve_bordered(bg_hat, L_hat_local, spec, k, cfg, trace, _depth + 1)
        M_local = table_hat.witness_union()
        M = frozenset(norm_edge(old_a[u], old_a[v]) for u, v in M_local)
    except FamilyCapExceeded:
        M = L_hat
        step.fallback = "family cap: kept every deletable edge of the side"
    L_star = (L - L_hat) | M
    step.witnesses = M
    step.reduced_allowed = L_star

    # replace A by a gadget glued along Z
    Z = tuple(sorted({u for e in M for u in e} | set(hat_x)))
    zs = set(Z)
    step.z = Z
    r_edges = tuple((u, v, w) for u, v, w in g_hat.edges
                    if not (old_a[u] in zs and old_a[v] in zs))
    R = BoundariedGraph(WeightedGraph(g_hat.n, r_edges), tuple(pos_a[v] for v in Z))
    R_star = cut_reduce(R, INF)
    keep = sorted(set(B) | zs)
    Qg, old_q = g.induced(keep)
    pos_q = {v: i for i, v in enumerate(old_q)}
    Q = BoundariedGraph(Qg, tuple(pos_q[v] for v in Z))
    G_star, _ = boundary_sum_ids(Q, R_star)
    step.q_ids = old_q

    if G_star.n >= g.n:
        step.fallback = "; ".join(filter(None, [step.fallback, "no progress: exhaustive search over the reduced deletable set"]))
        members = family_for(bg.r, k, cfg.family_cap, cfg.labeled_cap)
        return brute_force_bordered(bg, L_star, spec, k, members)

    x_star = tuple(pos_q[v] for v in x)
    L_star_local = frozenset((pos_q[u], pos_q[v]) for u, v in L_star)
    step.reduced_graph = G_star
    step.reduced_boundary = x_star
    table_star = solve_bordered(BoundariedGraph(G_star, x_star), L_star_local, spec, k, cfg,
                                trace, _depth + 1)
    return _map_table(table_star, bg, spec, k, old_q)


def solve_connected(g: WeightedGraph, spec: ConnSpec, k: int,
                    cfg: RecursionConfig = RecursionConfig(),
                    trace: Optional[RecursionTrace] = None) -> Optional[Solution]:
    """Solution for a connected graph, or None."""
    if not g.is_connected():
        raise GraphError("solve_connected needs a connected graph")
    t = len(spec)
    if t == 0 or t > k + 1:
        sol = None
    elif t == 1:
        sol = certify(g, (), spec, k) if connectivity(g) >= spec[0] else None
    else:
        table = solve_bordered(BoundariedGraph(g, ()), g.edge_set, spec, k, cfg, trace)
        e = table.entry(0, spec)
        sol = None
        if e is not None:
            sol = certify(g, e.edges, spec, k)
            if sol is None:
                raise CgwcError("internal: recursion produced an invalid witness")
    if cfg.oracle_check:
        from .oracle import oracle_solve

        if (oracle_solve(g, None, spec, k) is None) != (sol is None):
            raise CgwcError("oracle cross-check disagrees with the solver")
    return sol


def min_budget(g: WeightedGraph, spec: ConnSpec, k: int,
               cfg: RecursionConfig = RecursionConfig()) -> Optional[tuple[int, Solution]]:
    """Least k̂ <= k for which the connected instance is solvable."""
    for kh in range(k + 1):
        sol = solve_connected(g, spec, kh, cfg)
        if sol is not None:
            return kh, sol
    return None
