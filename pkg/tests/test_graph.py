import pytest
from hypothesis import given

from doublestar.graph import (
    Graph,
    GraphBuilder,
    bits_to_list,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)

from conftest import graphs


def test_complete_graph_sizes():
    assert complete_graph(0).n == 0
    assert complete_graph(0).edge_count() == 0
    k4 = complete_graph(4)
    assert k4.edge_count() == 6
    assert k4.degrees() == [3, 3, 3, 3]
    assert complete_graph(8).edge_count() == 28


def test_disjoint_union():
    k4 = complete_graph(4)
    assert disjoint_union(k4, complete_graph(0)) == k4
    two = disjoint_union(k4, k4)
    assert (two.n, two.edge_count()) == (8, 12)
    g = disjoint_union(complete_graph(8), complete_graph(3))
    assert (g.n, g.edge_count()) == (11, 31)
    assert sorted(map(len, g.components())) == [3, 8]


def test_degree():
    assert all(complete_graph(4).degree(v) == 3 for v in range(4))
    assert all(Graph.empty(5).degree(v) == 0 for v in range(5))
    with pytest.raises(IndexError):
        complete_graph(4).degree(4)


def test_common_neighbors():
    k5 = complete_graph(5)
    assert all(k5.common_neighbor_count(u, v) == 3 for u in range(5) for v in range(5) if u != v)
    assert star_graph(9).common_neighbor_count(0, 3) == 0
    assert cycle_graph(4).common_neighbor_count(0, 2) == 2
    with pytest.raises(ValueError):
        k5.common_neighbor_count(1, 1)


def test_max_degree():
    assert complete_graph(8).max_degree() == 7
    assert star_graph(9).max_degree() == 9
    assert disjoint_union(complete_graph(4), complete_graph(4)).max_degree() == 3
    with pytest.raises(ValueError):
        Graph.empty(0).max_degree()


def test_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0])  # loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])  # out of range
    with pytest.raises(ValueError):
        Graph(3, [0, 0])


def test_builder_rejects_mistakes():
    b = GraphBuilder(3)
    b.add_edge(0, 1)
    with pytest.raises(ValueError):
        b.add_edge(1, 0)
    with pytest.raises(ValueError):
        b.add_edge(2, 2)
    with pytest.raises(IndexError):
        b.add_edge(0, 3)


def test_edges_sorted_and_paths():
    g = path_graph(4)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert bits_to_list(0b10110) == [1, 2, 4]


def test_induced_and_relabel():
    g = cycle_graph(5)
    h = g.induced([0, 1, 2])
    assert list(h.edges()) == [(0, 1), (1, 2)]
    r = g.relabel([4, 3, 2, 1, 0])
    assert r.edge_count() == 5 and r.has_edge(4, 3)
    with pytest.raises(ValueError):
        g.relabel([0, 0, 1, 2, 3])


@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degrees()) == 2 * g.edge_count()
    for u, v in g.edges():
        assert u < v and g.has_edge(v, u)
    assert Graph(g.n, g.adj) == g
