from math import comb

import pytest

from doublestar.constructions import (
    ConstructionError,
    Family,
    HGeneralParams,
    build_h2,
    build_h3,
    build_h_general,
    cliques_plus_remainder,
    erdos_gallai_violation,
    extremal_construction,
    extremal_graph,
    graph_from_degree_sequence,
    near_regular,
)
from doublestar.canonical import canonical_form
from doublestar.detect import DoubleStarPattern, is_free
from doublestar.formulas import FormulaDomainError
from doublestar.graph import complete_graph, disjoint_union


def test_cliques_plus_remainder():
    g = cliques_plus_remainder(1, 8, 1)
    assert (g.n, g.edge_count()) == (9, 28)
    g = cliques_plus_remainder(2, 4, 0)
    assert canonical_form(g) == canonical_form(disjoint_union(complete_graph(4), complete_graph(4)))
    assert cliques_plus_remainder(0, 5, 3) == complete_graph(3)
    with pytest.raises(ValueError):
        cliques_plus_remainder(1, 4, 4)


def test_near_regular_examples():
    g = near_regular(9, 4)
    assert g.degrees() == [4] * 9 and g.edge_count() == 18
    g = near_regular(7, 3)
    assert sorted(g.degrees()) == [2] + [3] * 6 and g.edge_count() == 10
    assert near_regular(5, 4) == complete_graph(5)
    with pytest.raises(ValueError):
        near_regular(4, 4)


def test_near_regular_all_small():
    for n in range(1, 30):
        for r in range(n):
            degs = sorted(near_regular(n, r).degrees())
            if r * n % 2 == 0:
                assert degs == [r] * n
            else:
                assert degs == [r - 1] + [r] * (n - 1)
            assert is_free(near_regular(n, r), DoubleStarPattern(1, max(r, 1)))


def test_degree_sequences():
    assert graph_from_degree_sequence([2, 2, 2, 2]).degrees() == [2, 2, 2, 2]
    g = graph_from_degree_sequence([6] * 10)
    assert g.edge_count() == 30 and g.degrees() == [6] * 10
    with pytest.raises(ConstructionError):
        graph_from_degree_sequence([3, 3, 3, 1])
    assert "index k = 2" in erdos_gallai_violation([3, 3, 1, 1])
    assert erdos_gallai_violation([1, 1]) is None


@pytest.mark.parametrize("b, n, m", [(11, 23, 128), (12, 25, 151), (22, 45, 496)])
def test_h2_examples(b, n, m):
    g = build_h2(b)
    assert (g.n, g.edge_count()) == (n, m)
    assert g.max_degree() == b + 1
    assert is_free(g, DoubleStarPattern(3, b))


def test_h2_spectrum():
    for b in range(11, 41):
        degs = build_h2(b).degrees()
        assert degs.count(b + 1) == 3
        assert {0, b, b + 1} == {v for v, d in enumerate(degs) if d == b + 1}
        assert degs.count(b - 1) == (1 if b % 2 == 0 else 0)
        assert degs.count(b) == len(degs) - 3 - degs.count(b - 1)


@pytest.mark.parametrize("b, n, m", [(11, 24, 135), (12, 26, 160), (34, 70, 1199)])
def test_h3_examples(b, n, m):
    g = build_h3(b)
    assert (g.n, g.edge_count()) == (n, m)
    assert g.max_degree() == b + 1
    assert is_free(g, DoubleStarPattern(3, b))


def test_h3_spectrum():
    for b in range(11, 41):
        low = b // 2
        degs = build_h3(b).degrees()
        assert {v for v, d in enumerate(degs) if d == b + 1} == {0, *range(low + 1, b + 2)}
        # one short inner vertex when low is odd, and u_b misses its v-neighbour when b is odd
        assert degs.count(b - 1) == (low % 2) + (b % 2)
        assert degs.count(b) == len(degs) - (b + 2 - low) - degs.count(b - 1)


def test_builders_reject_small_b():
    with pytest.raises(FormulaDomainError):
        build_h2(10)
    with pytest.raises(FormulaDomainError):
        build_h3(10)


@pytest.mark.parametrize(
    "a, b, q, k, s, res, n",
    [(4, 60, 57, -1, 20, 3, 122), (5, 80, 74, 1, 59, 2, 160), (3, 20, 18, -1, 10, 2, 42)],
)
def test_h_general_examples(a, b, q, k, s, res, n):
    prm = HGeneralParams.derive(a, b, q)
    assert (prm.k, prm.s, prm.residual, prm.n) == (k, s, res, n)
    g = build_h_general(a, b, q)
    assert g.n == n
    assert is_free(g, DoubleStarPattern(a, b))
    degs = g.degrees()
    assert max(degs) == b + 1
    assert {v for v, d in enumerate(degs) if d == b + 1} == {0, *range(s + 1, b + 2)}
    assert 1 <= res <= a - 1 and s <= b + 1


def test_h_general_beats_cliques_at_4_60_57():
    g = build_h_general(4, 60, 57)
    f = 2 * 57 * (60 - 57 + 2) - 3 * 4 * 64 + 4 * 57 - 6
    assert f > 0
    assert g.edge_count() > comb(65, 2) + comb(57, 2)


def test_h_general_window():
    with pytest.raises(FormulaDomainError):
        HGeneralParams.derive(4, 60, 60)
    with pytest.raises(FormulaDomainError):
        HGeneralParams.derive(2, 60, 57)


def test_extremal_graph_examples():
    fam, g = extremal_construction(9, 3, 4)
    assert fam is Family.CLIQUES_PLUS_REMAINDER
    assert canonical_form(g) == canonical_form(disjoint_union(complete_graph(8), complete_graph(1)))
    fam, g = extremal_construction(47, 3, 23)
    assert fam is Family.H2 and g == build_h2(23) and g.edge_count() == 542
    fam, g = extremal_construction(21, 2, 12)
    assert fam is Family.NEAR_REGULAR and g == near_regular(21, 12) and g.edge_count() == 126
    assert extremal_graph(16, 4, 7) is None


def test_composite_lists_full_cliques_first():
    _, g = extremal_construction(47 + 27, 3, 23)
    assert g.induced(range(27)) == complete_graph(27)
