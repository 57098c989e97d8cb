import pytest

from gamegraph import (
    BudgetExceeded,
    are_isomorphic,
    count_min_positions,
    count_simple_rulegraphs,
    enumerate_by_fbd,
    enumerate_simple_rulegraphs,
    fbd,
    feasibility,
    index_table,
    is_simple,
    iter_by_fbd,
    iter_simple_rulegraphs,
    m_graph,
    sources,
    tower2,
    x_total,
)
from gamegraph.enumeration import canonical_key, decimal_string

RULEGRAPHS = [1, 1, 2, 9, 88, 1802, 75598]
GAMEGRAPHS = [1, 1, 2, 8, 68, 1248, 48640]


def test_tower():
    assert [tower2(n) for n in range(5)] == [1, 2, 4, 16, 65536]
    assert tower2(5).bit_length() == 65537
    with pytest.raises(BudgetExceeded):
        tower2(6)
    with pytest.raises(BudgetExceeded):
        tower2(5, bit_budget=1000)


def test_index_table_small():
    table = index_table(2)
    assert table.levels[0] == {(1, 0): 1}
    assert table.levels[1] == {(1, 1): 1}
    assert table.levels[2] == {(1, 2): 2, (2, 2): 1}
    assert table.indices(2) == [(1, 2), (2, 2)]
    assert index_table(3).totals() == [1, 1, 3, 4125]
    with pytest.raises(BudgetExceeded):
        index_table(4)


def test_x_total():
    assert [x_total(d) for d in range(4)] == [1, 1, 3, 4125]
    assert len(decimal_string(x_total(4))) == 19724
    with pytest.raises(BudgetExceeded):
        x_total(5)


def test_index_support_matches_description():
    table = index_table(3)
    for d in range(1, 4):
        expected = {(big_t, t + u) for (t, u) in table.levels[d - 1]
                    for big_t in range(1, 2 ** (t + u) - 2 ** u + 1)}
        assert set(table.levels[d]) == expected
        assert all(x > 0 for x in table.levels[d].values())


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_by_positions(n):
    assert count_simple_rulegraphs(n) == RULEGRAPHS[n - 1]
    assert count_simple_rulegraphs(n, gamegraphs_only=True) == GAMEGRAPHS[n - 1]


def test_count_budget_and_zero():
    assert count_simple_rulegraphs(0) == 0
    with pytest.raises(BudgetExceeded):
        count_simple_rulegraphs(8)
    with pytest.raises(BudgetExceeded):
        list(iter_simple_rulegraphs(6))


def test_three_position_stream():
    graphs = list(enumerate_simple_rulegraphs(3, "stream"))
    assert len(graphs) == 2
    assert sorted(g.arrow_count for g in graphs) == [2, 3]
    assert all(len(sources(g)) == 1 for g in graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_streams_are_simple_and_distinct(n):
    graphs = list(iter_simple_rulegraphs(n))
    assert len(graphs) == RULEGRAPHS[n - 1]
    assert all(is_simple(g) and g.n == n for g in graphs)
    assert len({canonical_key(g) for g in graphs}) == len(graphs)
    games = list(iter_simple_rulegraphs(n, gamegraphs_only=True))
    assert {canonical_key(g) for g in games} == {canonical_key(g) for g in graphs if len(sources(g)) == 1}


def test_by_fbd_counts_and_shapes():
    assert [enumerate_by_fbd(d) for d in range(4)] == [1, 1, 3, 4125]
    two = list(iter_by_fbd(2))
    assert sorted(g.n for g in two) == [3, 3, 4]
    assert all(fbd(g) == 2 and is_simple(g) for g in two)
    with pytest.raises(BudgetExceeded):
        enumerate_by_fbd(4)


def test_dual_scheme_cross_check():
    by_fbd: dict[int, int] = {}
    for n in range(1, 7):
        for g in iter_simple_rulegraphs(n, budget=6):
            d = fbd(g)
            by_fbd[d] = by_fbd.get(d, 0) + 1
    # every graph of formal birthday at most 2 has at most 4 positions
    assert [by_fbd[d] for d in range(3)] == [x_total(d) for d in range(3)]


@pytest.mark.parametrize("d", range(4))
def test_min_positions_and_unique_maximum(d):
    graphs = list(iter_by_fbd(d))
    assert sum(1 for g in graphs if g.n == d + 1) == count_min_positions(d)
    biggest = [g for g in graphs if g.n == tower2(d)]
    assert len(biggest) == 1 and are_isomorphic(biggest[0], m_graph(d))
    assert all(g.n <= tower2(d) for g in graphs)


def test_feasibility():
    assert feasibility(3, 2) and not feasibility(2, 2)
    assert feasibility(4, 2) and not feasibility(5, 2)
    assert feasibility(65536, 4) and not feasibility(65537, 4)
    assert feasibility(10 ** 100, 6)
    assert count_min_positions(2) == 2 and count_min_positions(3) == 8


def test_enumerate_modes():
    with pytest.raises(ValueError):
        enumerate_simple_rulegraphs(3, "bogus")
    with pytest.raises(ValueError):
        enumerate_by_fbd(1, "bogus")
    assert len(list(enumerate_by_fbd(1, "stream"))) == 1


@pytest.mark.slow
def test_eight_positions():
    assert count_simple_rulegraphs(8, budget=8) == 6421599
