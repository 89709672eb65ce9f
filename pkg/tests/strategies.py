"""hypothesis 图生成策略"""

from hypothesis import assume
from hypothesis import strategies as st

from spectral_split.graph_core import Graph, build_graph, is_connected
from spectral_split.verify.enumeration import vertex_pairs


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 7, connected: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = vertex_pairs(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build_graph(n, [pair for pair, chosen in zip(pairs, keep) if chosen])
    if connected:
        assume(is_connected(g))
    return g
