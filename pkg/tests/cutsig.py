"""Boundary cut signatures of boundaried graphs, computed by brute force.

For a connected glue G = F (+) H, a bipartition of G restricts to a side
assignment s of the boundary.  For s splitting the boundary, the cheapest
completion costs c_F(s) + c_H(s), where c_X(s) is the least cut of X over
extensions of s.  For s keeping the boundary on one side, some vertex
must leave it, which costs min(c*_F, c*_H), with c*_X the least cut
separating the boundary from at least one other vertex of X.  So
lambda(G) depends on H only through (c_H(s) for splitting s, c*_H), and
capping both at p caps lambda(G) at p.  Components of H are handled one at
a time because a glued component only sees the H-components inside it.
"""

import numpy as np

from cgwc.graph import INF


def component_signatures(g, boundary, p):
    """{boundary positions of a component: (capped c for each split of
    them, capped c*)}"""
    out = {}
    for comp in g.components():
        sub, old = g.induced(comp)
        pos = {v: i for i, v in enumerate(old)}
        xs = [pos[x] for x in boundary if x in pos]
        piece = tuple(i for i, x in enumerate(boundary) if x in pos)
        n = sub.n
        masks = np.arange(1 << n, dtype=np.int64)
        cut = np.zeros(masks.shape, dtype=np.int64)
        for u, v, w in sub.edges:
            cut += w * (((masks >> u) ^ (masks >> v)) & 1)
        bmask = np.zeros(masks.shape, dtype=np.int64)
        for i, x in enumerate(xs):
            bmask |= ((masks >> x) & 1) << i
        xbits = sum(1 << x for x in xs)
        full = (1 << len(xs)) - 1
        splits = []
        for s in range(1, full):
            sel = bmask == s
            splits.append(min(int(cut[sel].min()), p))
        # boundary all on side 0 with some other vertex on side 1
        sel = (bmask == 0) & ((masks & ~xbits) != 0)
        star = min(int(cut[sel].min()), p) if sel.any() else INF
        out[piece] = (tuple(splits), star)
    return out
