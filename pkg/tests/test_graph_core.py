import networkx as nx
import pytest

from spectral_split.constants import FAMILY_CYCLE, FAMILY_PATH, FAMILY_STAR, FAMILY_TILDE_D
from spectral_split.errors import (
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    MalformedGraph6,
    NoSuchEdge,
    ParameterOutOfRange,
)
from spectral_split.graph_core import (
    NamedFamily,
    add_edge,
    build_graph,
    components,
    delete_vertex,
    is_connected,
    is_subgraph_of,
    make_family,
    parse_graph6,
    remove_edge,
    to_graph6,
)


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.degrees() == [1, 1]
    assert g.edge_count == 1


def test_star_degree_sequence():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert g.degree_sequence() == [4, 1, 1, 1, 1]


@pytest.mark.parametrize(
    "n, edges, error",
    [
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(1, 1)], LoopEdge),
        (3, [(0, 3)], IndexOutOfRange),
    ],
)
def test_build_graph_rejects(n, edges, error):
    with pytest.raises(error):
        build_graph(n, edges)


def test_edges_sorted_and_matrix_symmetric():
    g = build_graph(4, [(3, 1), (0, 2), (2, 1)])
    assert list(g.edges()) == [(0, 2), (1, 2), (1, 3)]
    matrix = g.adjacency_matrix()
    assert (matrix == matrix.T).all()
    assert matrix.sum() == 2 * g.edge_count


def test_tilde_d_five():
    g = make_family(NamedFamily(FAMILY_TILDE_D, 5))
    assert g.n == 6
    assert g.degree_sequence() == [3, 3, 1, 1, 1, 1]


def test_tilde_d_four_is_star():
    g = make_family(NamedFamily(FAMILY_TILDE_D, 4))
    assert g == make_family(NamedFamily(FAMILY_STAR, 4))


def test_cycle_four():
    g = make_family(NamedFamily(FAMILY_CYCLE, 4))
    assert g.n == 4
    assert g.degrees() == [2, 2, 2, 2]


@pytest.mark.parametrize("family", [NamedFamily(FAMILY_CYCLE, 2), NamedFamily(FAMILY_TILDE_D, 3), NamedFamily("Wheel", 5)])
def test_make_family_rejects(family):
    with pytest.raises(ParameterOutOfRange):
        make_family(family)


def test_connectivity():
    assert is_connected(make_family(NamedFamily(FAMILY_STAR, 4)))
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(build_graph(1, []))


def test_components():
    assert components(build_graph(4, [(0, 1), (2, 3)])) == [(0, 1), (2, 3)]
    assert components(make_family(NamedFamily(FAMILY_PATH, 5))) == [(0, 1, 2, 3, 4)]


def test_parse_star_graph6():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4)}
    assert g.degree(4) == 4


def test_to_graph6_single_edge():
    assert to_graph6(build_graph(2, [(0, 1)])) == "A_"


def test_parse_with_header():
    assert parse_graph6(">>graph6<<A_") == build_graph(2, [(0, 1)])


@pytest.mark.parametrize("text", ["~", "", "A ", "A`", "A__", "D?", "Dé{", "Aÿ"])
def test_parse_malformed(text):
    with pytest.raises(MalformedGraph6):
        parse_graph6(text)


def test_graph6_matches_networkx():
    g = make_family(NamedFamily(FAMILY_TILDE_D, 7))
    expected = nx.to_graph6_bytes(g.nx_graph, header=False).decode("ascii").strip()
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


def test_delete_vertex_relabels():
    g = make_family(NamedFamily(FAMILY_PATH, 4))
    assert delete_vertex(g, 0) == make_family(NamedFamily(FAMILY_PATH, 3))
    assert not is_connected(delete_vertex(g, 1))


def test_add_and_remove_edge():
    g = make_family(NamedFamily(FAMILY_PATH, 3))
    bigger = add_edge(g, 0, 2)
    assert bigger == make_family(NamedFamily(FAMILY_CYCLE, 3))
    assert remove_edge(bigger, 2, 0) == g
    with pytest.raises(DuplicateEdge):
        add_edge(g, 0, 1)
    with pytest.raises(NoSuchEdge):
        remove_edge(g, 0, 2)


def test_is_subgraph_of():
    path = make_family(NamedFamily(FAMILY_PATH, 4))
    cycle = make_family(NamedFamily(FAMILY_CYCLE, 4))
    assert is_subgraph_of(path, cycle)
    assert not is_subgraph_of(cycle, path)
    assert not is_subgraph_of(path, make_family(NamedFamily(FAMILY_CYCLE, 5)))
