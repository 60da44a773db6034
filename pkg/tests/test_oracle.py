import networkx as nx
import pytest

from doublestar.canonical import UnsupportedSizeError, canonical_form
from doublestar.detect import DoubleStarPattern, is_free
from doublestar.formulas import ex_generalized_clique
from doublestar.graph import complete_graph, disjoint_union
from doublestar.oracle import (
    SearchConfig,
    brute_force_max_edges,
    count_cliques,
    enumerate_extremal,
    max_cliques_free,
    max_edges_free,
)

from conftest import random_graph

COLD = SearchConfig(warm_start=False)


@pytest.mark.parametrize("n, a, b, value", [(9, 3, 4, 28), (7, 1, 2, 9), (4, 1, 2, 6)])
def test_known_values(n, a, b, value):
    for cfg in (SearchConfig(), COLD):
        res = max_edges_free(n, a, b, cfg)
        assert res.proven_optimal
        assert res.value == value
        assert len(res.witnesses) == 1


def test_witnesses_are_valid():
    for n in range(1, 10):
        for a, b in [(1, 2), (2, 3), (3, 4), (2, 2), (1, 4)]:
            res = max_edges_free(n, a, b, COLD)
            for form in res.witnesses:
                g = form.to_graph()
                assert g.edge_count() == res.value
                assert is_free(g, DoubleStarPattern(a, b))


def test_enumerate_small():
    two_k4 = disjoint_union(complete_graph(4), complete_graph(4))
    assert enumerate_extremal(8, 1, 2) == [canonical_form(two_k4)]
    assert enumerate_extremal(4, 1, 2) == [canonical_form(complete_graph(4))]


def test_enumerate_9_3_4():
    forms = enumerate_extremal(9, 3, 4)
    assert all(len(f.edges) == 28 for f in forms)
    # recorded run: K_8 plus an isolated vertex is the only class
    assert forms == [canonical_form(disjoint_union(complete_graph(8), complete_graph(1)))]


@pytest.mark.parametrize("n, a, b", [(5, 1, 2), (6, 1, 3), (7, 2, 3)])
def test_brute_force_examples(n, a, b):
    assert brute_force_max_edges(n, a, b) == max_edges_free(n, a, b).value


def test_brute_force_guard():
    with pytest.raises(UnsupportedSizeError):
        brute_force_max_edges(8, 1, 2)


def test_cap_independence():
    for n in range(1, 9):
        for a in range(1, 5):
            for b in range(a, 5):
                capped = max_edges_free(n, a, b, SearchConfig(warm_start=False))
                free = max_edges_free(n, a, b, SearchConfig(degree_cap_enabled=False, warm_start=False))
                assert capped.value == free.value, (n, a, b)


def test_limits_fire_without_raising():
    res = max_edges_free(12, 3, 4, SearchConfig(node_limit=1000))
    assert not res.proven_optimal
    assert res.nodes_explored <= 1001
    assert res.value >= 0
    res = max_edges_free(10, 2, 2, SearchConfig(time_limit=0.0, warm_start=False))
    assert not res.proven_optimal


def test_parallel_matches_serial():
    for n, a, b in [(8, 1, 2), (9, 2, 3), (10, 3, 4), (9, 2, 2)]:
        serial = max_edges_free(n, a, b, COLD)
        par = max_edges_free(n, a, b, SearchConfig(warm_start=False, jobs=2))
        assert par.value == serial.value
        assert par.witnesses == serial.witnesses
        again = max_edges_free(n, a, b, SearchConfig(warm_start=False, jobs=3))
        assert again.nodes_explored == par.nodes_explored


def test_invalid_arguments():
    with pytest.raises(ValueError):
        max_edges_free(0, 1, 2)
    with pytest.raises(ValueError):
        max_edges_free(5, 0, 2)


def test_count_cliques_matches_networkx(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        sizes = [len(c) for c in nx.enumerate_all_cliques(ref)]
        for k in range(1, 6):
            assert count_cliques(g, k) == sizes.count(k)


def test_max_cliques_examples():
    assert max_cliques_free(5, 1, 2, 4) == 1
    assert max_cliques_free(8, 1, 2, 3) == 8
    assert max_cliques_free(6, 1, 3, 6) == 0
    with pytest.raises(UnsupportedSizeError):
        max_cliques_free(9, 1, 2, 3)
    with pytest.raises(ValueError):
        max_cliques_free(5, 1, 2, 2)


def test_max_cliques_small_grid():
    for n in range(1, 8):
        for a, b in [(1, 2), (1, 3), (2, 3)]:
            for k in (3, 4):
                assert max_cliques_free(n, a, b, k) == ex_generalized_clique(n, a, b, k).value
