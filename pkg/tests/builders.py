"""Small named graphs and hypothesis strategies."""

from itertools import combinations

from hypothesis import strategies as st

from bddkernel.graph import Graph


def path_graph(n, start=0):
    return Graph(range(start, start + n), [(v, v + 1) for v in range(start, start + n - 1)])


def star_graph(leaves, center=0):
    """K_{1,leaves} on ids 0..leaves, with ``center`` as the hub."""
    return Graph(range(leaves + 1), [(center, w) for w in range(leaves + 1) if w != center])


def complete_graph(n, start=0):
    vs = range(start, start + n)
    return Graph(vs, combinations(vs, 2))


def cycle_graph(n, start=0):
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [e for e, keep in zip(pairs, mask) if keep])
