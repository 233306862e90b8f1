"""Independent enumerator for the completion family.

Plain brute force: every labelled weighted graph on r..N vertices (boundary
0..r-1), filtered by the membership conditions, deduplicated by the lexicographically
smallest adjacency code over all permutations of the non-boundary vertices.
Shares no code with the package beyond the graph container.
"""

import itertools


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v, _ in edges:
        parent[find(u)] = find(v)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def _cut_to_boundary(n, edges, comp, r, v):
    """min w(A, comp minus A) over A containing the boundary part of comp, not v."""
    best = None
    others = [x for x in comp if x >= r and x != v]
    bset = [x for x in comp if x < r]
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            side = set(bset) | set(extra)
            w = sum(c for a, b, c in edges if (a in side) != (b in side) and a in comp and b in comp)
            best = w if best is None else min(best, w)
    return best


def _code(n, wmat, r, perm):
    order = list(range(r)) + list(perm)
    return tuple(wmat[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))


def reference_family(r, s, n_max):
    out = {}
    for n in range(r, n_max + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if v >= r]
        for ws in itertools.product(range(s + 1), repeat=len(pairs)):
            edges = [(u, v, w) for (u, v), w in zip(pairs, ws) if w]
            comps = _components(n, edges)
            if any(all(x >= r for x in c) for c in comps):
                continue
            ok = True
            for c in comps:
                interior = [x for x in c if x >= r]
                if interior and min(_cut_to_boundary(n, edges, c, r, v) for v in interior) > s:
                    ok = False
                    break
            if not ok:
                continue
            wmat = [[0] * n for _ in range(n)]
            for u, v, w in edges:
                wmat[u][v] = wmat[v][u] = w
            code = min(_code(n, wmat, r, p) for p in itertools.permutations(range(r, n)))
            out[(n, code)] = edges
    return out
