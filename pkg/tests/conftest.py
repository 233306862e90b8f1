import itertools
import os

from hypothesis import HealthCheck, settings, strategies as st

from cgwc.graph import WeightedGraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def weighted_graphs(draw, min_n=1, max_n=7, max_w=3, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = {p: draw(st.integers(1, max_w)) for p in chosen}
    if connected:
        # a random spanning path keeps the graph connected
        order = draw(st.permutations(range(n)))
        for a, b in zip(order, order[1:]):
            e = (min(a, b), max(a, b))
            edges.setdefault(e, draw(st.integers(1, max_w)))
    return WeightedGraph.from_edges(n, [(u, v, w) for (u, v), w in edges.items()])


def brute_connectivity(g: WeightedGraph):
    """Minimum over all bipartitions, written without the library's cut code."""
    if g.n == 1:
        return float("inf")
    best = None
    for mask in range(1, 1 << (g.n - 1)):
        cut = sum(w for u, v, w in g.edges if ((mask >> u) & 1) != ((mask >> v) & 1))
        best = cut if best is None else min(best, cut)
    return best
