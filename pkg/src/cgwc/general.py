"""Disconnected inputs.

Components too well connected to be split within budget are matched to a
constraint and dropped.  The rest are grouped by connectivity level; each
level is solved as a uniform instance in which the components to split are
chosen by a minimum-cost assignment whose costs are least budgets from the
connected solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .connectivity import certify, component_profile, connectivity
from .graph import BoundariedGraph, ConnSpec, Solution, WeightedGraph, dominates, norm_edge
from .recursive import RecursionConfig, solve_bordered


@dataclass(frozen=True)
class LevelGroup:
    level: int
    graph: WeightedGraph
    ids: tuple[int, ...]  # old id of each vertex of ``graph``
    count: int


@dataclass(frozen=True)
class Reduced:
    graph: WeightedGraph
    ids: tuple[int, ...]
    spec: ConnSpec
    removed: tuple


@dataclass(frozen=True)
class AssignmentProblem:
    cost: np.ndarray  # rows: demanded splits, columns: components; inf forbids


def remove_high_components(g: WeightedGraph, spec: ConnSpec, k: int) -> Optional[Reduced]:
    """Drop every component with connectivity > k together with the largest
    constraint it satisfies.  None when some component satisfies none, or
    the graph empties while constraints remain."""
    left = list(spec)
    keep: list[int] = []
    removed = []
    for comp, lam in component_profile(g):
        if lam > k:
            fits = [x for x in left if x <= lam]
            if not fits:
                return None
            left.remove(max(fits))
            removed.append((comp, lam))
        else:
            keep.extend(comp)
    if not keep and left:
        return None
    sub, ids = g.induced(keep)
    return Reduced(sub, ids, ConnSpec(tuple(left)), tuple(removed))


# -- assignment ---------------------------------------------------------------

def hungarian(cost: Sequence[Sequence[float]]) -> tuple[list[int], float]:
    """Minimum-cost assignment of every row to a distinct column
    (rows <= columns).  Returns (column of each row, total).  Infinite
    entries are forbidden; an infeasible instance has total inf."""
    a = np.asarray(cost, dtype=float)
    rows, cols = a.shape
    if rows == 0:
        return [], 0.0
    if rows > cols:
        raise ValueError("more rows than columns")
    finite = a[np.isfinite(a)]
    big = (np.abs(finite).sum() + 1.0) * (rows + 1) if finite.size else 1.0
    n = cols
    m = np.zeros((n, n))
    m[:rows] = np.where(np.isfinite(a), a, big)
    # shortest augmenting paths with potentials, 1-based
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    match = np.zeros(n + 1, dtype=int)  # match[col] = row
    way = np.zeros(n + 1, dtype=int)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = np.full(n + 1, np.inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = np.inf
            j1 = 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = m[i0 - 1, j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while True:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
            if j0 == 0:
                break
    assign = [-1] * rows
    for j in range(1, n + 1):
        if 0 < match[j] <= rows:
            assign[match[j] - 1] = j - 1
    if any(not np.isfinite(a[i, assign[i]]) for i in range(rows)):
        return assign, float("inf")
    return assign, float(sum(a[i, assign[i]] for i in range(rows)))


# -- uniform connectivity -----------------------------------------------------

@lru_cache(maxsize=1 << 16)
def component_min_budget(g: WeightedGraph, spec: ConnSpec, k: int,
                         cfg: RecursionConfig) -> Optional[tuple[int, frozenset]]:
    """Least k̂ <= k solving the connected instance, with a witness."""
    t = len(spec)
    if t == 0 or t > k + 1:
        return None
    if t == 1:
        return (0, frozenset()) if connectivity(g) >= spec[0] else None
    table = solve_bordered(BoundariedGraph(g, ()), g.edge_set, spec, k, cfg)
    e = table.entry(0, spec)
    if e is None:
        return None
    return e.khat, e.edges


def _partitions(total: int, parts: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of ``parts`` integers >= lo summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(lo, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _split_choices(spec: ConnSpec, sizes: tuple[int, ...]) -> Iterator[tuple[ConnSpec, ...]]:
    """Sub-spec tuples with the given sizes; equal sizes in nondecreasing order."""
    by_size = {}
    for t in set(sizes):
        by_size[t] = [s for s in spec.sub_specs() if len(s) == t]
    groups = [(t, sizes.count(t)) for t in sorted(set(sizes))]
    pools = [itertools.combinations_with_replacement(range(len(by_size[t])), c) for t, c in groups]
    for pick in itertools.product(*pools):
        out = []
        for (t, _), idx in zip(groups, pick):
            out.extend(by_size[t][i] for i in idx)
        yield tuple(out)


def _merged(parts) -> ConnSpec:
    out = ConnSpec()
    for p in parts:
        out = out + p
    return out


def solve_uniform(h: WeightedGraph, lam: int, spec: ConnSpec, k: int,
                  cfg: RecursionConfig = RecursionConfig()) -> Optional[Solution]:
    """Instance whose components all have connectivity lam <= k."""
    comps = h.components() if h.n else []
    s, t = len(comps), len(spec)
    if s > t or s < t - k:
        return None
    if s == t:
        return certify(h, (), spec, k)
    if len(spec.variate()) > 3 * k:
        return None
    subs = [h.induced(c) for c in comps]
    for p in range(1, min(k, s) + 1):
        for sizes in _partitions(t - s + p, p):
            if max(sizes) > k + 1:
                continue
            for choice in _split_choices(spec, sizes):
                if not spec.precedes(ConnSpec((lam,) * (s - p)) + _merged(choice)):
                    continue
                cost = np.full((p, s), np.inf)
                wit = {}
                for i, part in enumerate(choice):
                    for j, (sub, _) in enumerate(subs):
                        r = component_min_budget(sub, part, k, cfg)
                        if r is not None:
                            cost[i, j] = r[0]
                            wit[i, j] = r[1]
                assign, total = hungarian(cost)
                if total > k:
                    continue
                f = set()
                for i, j in enumerate(assign):
                    old = subs[j][1]
                    f |= {norm_edge(old[a], old[b]) for a, b in wit[i, j]}
                sol = certify(h, f, spec, k)
                if sol is not None:
                    return sol
    return None


# -- general case ---------------------------------------------------------------

def level_groups(g: WeightedGraph, k: int) -> list[LevelGroup]:
    prof = component_profile(g)
    out = []
    for i in range(1, k + 1):
        verts = [v for comp, lam in prof if lam == i for v in comp]
        if verts:
            sub, ids = g.induced(verts)
            out.append(LevelGroup(i, sub, ids, sum(1 for _, lam in prof if lam == i)))
    return out


def _budget_splits(levels, k: int, extra: int):
    """(h, p, t) per level: sum h <= k, p <= s, p <= t <= 2h, sum(t - p) = extra.
    Smaller total budget first."""
    n = len(levels)
    for total in range(k + 1):
        for hs in itertools.product(range(total + 1), repeat=n):
            if sum(hs) != total:
                continue
            per = []
            for lv, hi in zip(levels, hs):
                opts = [(hi, pi, ti) for pi in range(min(lv.count, 2 * hi) + 1)
                        for ti in range(pi, 2 * hi + 1)]
                per.append(opts)
            for combo in itertools.product(*per):
                if sum(ti - pi for _, pi, ti in combo) == extra:
                    yield combo


def solve_cgwc(g: WeightedGraph, spec: ConnSpec, k: int,
               cfg: RecursionConfig = RecursionConfig()) -> Optional[Solution]:
    """Solution for any instance, or None."""
    prof = component_profile(g)
    s, t = len(prof), len(spec)
    if s > t or s < t - k:
        return None
    if s == t:
        return certify(g, (), spec, k) if dominates([c for _, c in prof], spec) else None
    red = remove_high_components(g, spec, k)
    if red is None:
        return None
    if red.graph.n == 0:
        return certify(g, (), spec, k)
    spec2 = red.spec
    if len(spec2.variate()) > 3 * k:
        return None
    levels = level_groups(red.graph, k)
    s2 = sum(lv.count for lv in levels)
    memo: dict = {}
    for combo in _budget_splits(levels, k, len(spec2) - s2):
        per_level = []
        for lv, (hi, pi, ti) in zip(levels, combo):
            per_level.append([c for c in spec2.sub_specs(include_empty=True) if len(c) == ti])
        for parts in itertools.product(*per_level):
            total = ConnSpec()
            for lv, (hi, pi, ti), part in zip(levels, combo, parts):
                total = total + ConnSpec((lv.level,) * (lv.count - pi)) + part
            if not spec2.precedes(total):
                continue
            f = set()
            for lv, (hi, pi, ti), part in zip(levels, combo, parts):
                key = (lv.level, ConnSpec((lv.level,) * (lv.count - pi)) + part, hi)
                if key not in memo:
                    memo[key] = solve_uniform(lv.graph, lv.level, key[1], hi, cfg)
                sol = memo[key]
                if sol is None:
                    break
                f |= {norm_edge(lv.ids[a], lv.ids[b]) for a, b in sol.edges}
            else:
                ids = red.ids
                out = certify(g, {norm_edge(ids[a], ids[b]) for a, b in f}, spec, k)
                if out is not None:
                    return out
    return None
