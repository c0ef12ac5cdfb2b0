from hypothesis import strategies as st

from cbgraph.graph import Graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus random extra edges"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for i in range(1, n):
        edges.add((draw(st.integers(min_value=0, max_value=i - 1)), i))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for a, b in extra:
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges))
