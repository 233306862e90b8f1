"""Hot loops over small dense graphs.

Every kernel takes plain numpy arrays so it can be compiled by numba or run
interpreted (see :mod:`cgwc._jit`).  ``BIG`` stands in for +inf inside the
kernels; weights are checked at load so sums never reach it.
"""

from __future__ import annotations

import numpy as np

from ._jit import njit

BIG = np.int64(1) << np.int64(62)


@njit
def stoer_wagner(w):
    """Global minimum cut of a connected graph given by a dense weight matrix.

    Returns ``(weight, side)`` where ``side`` marks one shore of a minimum cut.
    Ties in the maximum-adjacency order go to the lowest vertex id.
    A single vertex yields ``(BIG, all-False)``.
    """
    n = w.shape[0]
    side = np.zeros(n, dtype=np.bool_)
    if n <= 1:
        return BIG, side
    W = w.copy()
    group = np.arange(n)
    active = np.ones(n, dtype=np.bool_)
    best = BIG
    conn = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    for phase in range(n - 1):
        for v in range(n):
            conn[v] = 0
            used[v] = False
        prev = -1
        last = -1
        cut = BIG
        for _ in range(n - phase):
            sel = -1
            for v in range(n):
                if active[v] and not used[v]:
                    if sel == -1 or conn[v] > conn[sel]:
                        sel = v
            used[sel] = True
            prev = last
            last = sel
            cut = conn[sel]
            for v in range(n):
                if active[v] and not used[v]:
                    conn[v] += W[sel, v]
        if cut < best:
            best = cut
            for v in range(n):
                side[v] = group[v] == last
        for v in range(n):
            W[prev, v] += W[last, v]
            W[v, prev] = W[prev, v]
        W[prev, prev] = 0
        active[last] = False
        for v in range(n):
            if group[v] == last:
                group[v] = prev
    return best, side


@njit
def max_flow(cap, s, t):
    """Edmonds-Karp on a dense symmetric capacity matrix.

    Returns ``(value, source_side)``; the source side is the set reachable
    from ``s`` in the final residual graph, i.e. the source-side-minimal
    minimum cut.
    """
    N = cap.shape[0]
    flow = np.zeros_like(cap)
    parent = np.empty(N, dtype=np.int64)
    queue = np.empty(N, dtype=np.int64)
    total = np.int64(0)
    while True:
        for v in range(N):
            parent[v] = -1
        parent[s] = s
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            for v in range(N):
                if parent[v] == -1 and cap[u, v] - flow[u, v] > 0:
                    parent[v] = u
                    queue[tail] = v
                    tail += 1
        if parent[t] == -1:
            break
        b = BIG
        v = t
        while v != s:
            u = parent[v]
            r = cap[u, v] - flow[u, v]
            if r < b:
                b = r
            v = u
        v = t
        while v != s:
            u = parent[v]
            flow[u, v] += b
            flow[v, u] -= b
            v = u
        total += b
    side = np.zeros(N, dtype=np.bool_)
    for v in range(N):
        side[v] = parent[v] != -1
    return total, side


@njit
def component_labels(w):
    """Label connected components of a dense weight matrix (0 = no edge).

    Labels are numbered in order of each component's lowest vertex.
    """
    n = w.shape[0]
    lab = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    c = 0
    for r in range(n):
        if lab[r] != -1:
            continue
        lab[r] = c
        top = 1
        stack[0] = r
        while top > 0:
            top -= 1
            u = stack[top]
            for v in range(n):
                if lab[v] == -1 and w[u, v] > 0:
                    lab[v] = c
                    stack[top] = v
                    top += 1
        c += 1
    return lab, c


@njit
def _profile_of(W, out_conn):
    """Fill ``out_conn`` with the sorted connectivities of W's components."""
    n = W.shape[0]
    lab, c = component_labels(W)
    idx = np.empty(n, dtype=np.int64)
    for comp in range(c):
        k = 0
        for v in range(n):
            if lab[v] == comp:
                idx[k] = v
                k += 1
        if k == 1:
            out_conn[comp] = BIG
            continue
        sub = np.empty((k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                sub[a, b] = W[idx[a], idx[b]]
        val, _ = stoer_wagner(sub)
        out_conn[comp] = val
    out_conn[:c].sort()
    for j in range(c, n):
        out_conn[j] = BIG
    return c


@njit
def count_subsets(cw, kmax, max_size):
    """Number of index subsets of ``cw`` with total weight <= kmax."""
    m = cw.shape[0]
    depth_cap = min(max_size, m)
    total = 1
    if depth_cap == 0:
        return total
    nxt = np.zeros(depth_cap, dtype=np.int64)
    wsum = np.zeros(depth_cap, dtype=np.int64)
    d = 0
    while d >= 0:
        i = nxt[d]
        if i >= m:
            d -= 1
            continue
        nxt[d] = i + 1
        ws = wsum[d] + cw[i]
        if ws > kmax:
            continue
        total += 1
        if d + 1 < depth_cap:
            d += 1
            wsum[d] = ws
            nxt[d] = i + 1
    return total


@njit
def deletion_profiles(w, cu, cv, cw, kmax, max_size):
    """Profile every deletion set drawn from the candidate edges.

    Candidate edge ``j`` joins ``cu[j]``-``cv[j]`` with weight ``cw[j]``.
    For each subset of at most ``max_size`` candidates with weight <= kmax
    (listed in lexicographic order of candidate indices) the kernel records
    the subset, its weight, the number of components of the remaining graph
    and the sorted component connectivities (padded with BIG).
    """
    n = w.shape[0]
    m = cw.shape[0]
    depth_cap = min(max_size, m)
    total = count_subsets(cw, kmax, max_size)
    subsets = np.full((total, max(depth_cap, 1)), -1, dtype=np.int64)
    weights = np.zeros(total, dtype=np.int64)
    ncomp = np.zeros(total, dtype=np.int64)
    conns = np.full((total, max(n, 1)), BIG, dtype=np.int64)
    W = w.copy()
    ncomp[0] = _profile_of(W, conns[0])
    if depth_cap == 0:
        return subsets, weights, ncomp, conns
    row = 1
    nxt = np.zeros(depth_cap, dtype=np.int64)
    app = np.full(depth_cap, -1, dtype=np.int64)
    wsum = np.zeros(depth_cap, dtype=np.int64)
    d = 0
    while d >= 0:
        j = app[d]
        if j >= 0:
            W[cu[j], cv[j]] += cw[j]
            W[cv[j], cu[j]] += cw[j]
            app[d] = -1
        i = nxt[d]
        if i >= m:
            d -= 1
            continue
        nxt[d] = i + 1
        ws = wsum[d] + cw[i]
        if ws > kmax:
            continue
        W[cu[i], cv[i]] -= cw[i]
        W[cv[i], cu[i]] -= cw[i]
        app[d] = i
        for a in range(d + 1):
            subsets[row, a] = app[a]
        weights[row] = ws
        ncomp[row] = _profile_of(W, conns[row])
        row += 1
        if d + 1 < depth_cap:
            d += 1
            wsum[d] = ws
            nxt[d] = i + 1
            app[d] = -1
    return subsets, weights, ncomp, conns


@njit
def enumerate_bonds(w, eu, ev, ew, pmax):
    """All bonds of weight <= pmax: edge sets whose removal leaves exactly two
    components with every removed edge running between them.

    Returns ``(weights, sides)``; ``sides[j]`` marks the shore holding
    vertex 0.  Each bond is found once, from its own edge set.
    """
    n = w.shape[0]
    m = ew.shape[0]
    depth_cap = min(pmax, m)
    cap_rows = count_subsets(ew, pmax, depth_cap)
    weights = np.zeros(cap_rows, dtype=np.int64)
    sides = np.zeros((cap_rows, n), dtype=np.bool_)
    if depth_cap == 0 or n < 2:
        return weights[:0], sides[:0]
    W = w.copy()
    row = 0
    nxt = np.zeros(depth_cap, dtype=np.int64)
    app = np.full(depth_cap, -1, dtype=np.int64)
    wsum = np.zeros(depth_cap, dtype=np.int64)
    d = 0
    while d >= 0:
        j = app[d]
        if j >= 0:
            W[eu[j], ev[j]] += ew[j]
            W[ev[j], eu[j]] += ew[j]
            app[d] = -1
        i = nxt[d]
        if i >= m:
            d -= 1
            continue
        nxt[d] = i + 1
        ws = wsum[d] + ew[i]
        if ws > pmax:
            continue
        W[eu[i], ev[i]] -= ew[i]
        W[ev[i], eu[i]] -= ew[i]
        app[d] = i
        lab, c = component_labels(W)
        if c == 2:
            ok = True
            for a in range(d + 1):
                e = app[a]
                if lab[eu[e]] == lab[ev[e]]:
                    ok = False
                    break
            if ok:
                weights[row] = ws
                for v in range(n):
                    sides[row, v] = lab[v] == 0
                row += 1
        if c <= 2 and d + 1 < depth_cap:
            # with three or more components no superset can be a bond
            d += 1
            wsum[d] = ws
            nxt[d] = i + 1
            app[d] = -1
    return weights[:row], sides[:row]
