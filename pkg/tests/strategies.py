from fractions import Fraction

from hypothesis import strategies as st

from splitoff.multigraph import MultiGraph

costs = st.fractions(min_value=-10, max_value=10, max_denominator=6)
nonneg_costs = st.fractions(min_value=0, max_value=10, max_denominator=6)


@st.composite
def multigraphs(draw, min_n=2, max_n=7, max_m=14, cost=costs):
    n = draw(st.integers(min_n, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(st.tuples(pairs, cost), max_size=max_m))
    g = MultiGraph(n)
    for (a, b), c in edges:
        g.add_edge(a, b, Fraction(c))
    return g
