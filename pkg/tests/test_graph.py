import random

import pytest

from gamegraph import (
    CycleDetected,
    DuplicateLabel,
    Gamegraph,
    MultipleSources,
    NoSource,
    Rulegraph,
    SelfLoop,
    UnknownEndpoint,
    UnknownPosition,
    ValidationError,
    as_gamegraph,
    gamma,
    induced_gamegraph,
    induced_subgraph,
    new_gamegraph,
    new_rulegraph,
    random_gamegraph,
    random_rulegraph,
    sources,
    star,
    subpositions,
    terminals,
)
from figures import con_example, three_cycle_arrows


def test_three_cycle_rejected():
    labels, arrows = three_cycle_arrows()
    with pytest.raises(CycleDetected) as info:
        new_rulegraph(labels, arrows)
    cycle = info.value.cycle
    assert cycle[0] == cycle[-1] and set(cycle) == {"a", "b", "c"}


def test_validation_errors():
    with pytest.raises(DuplicateLabel):
        new_rulegraph(["a", "a"], [])
    with pytest.raises(UnknownEndpoint):
        new_rulegraph(["a"], [("a", "z")])
    with pytest.raises(SelfLoop):
        new_rulegraph(["a"], [("a", "a")])
    with pytest.raises(NoSource):
        Gamegraph([], [])
    with pytest.raises(MultipleSources):
        new_gamegraph(["a", "b"], [])
    with pytest.raises(NoSource):
        new_gamegraph(["a", "b"], [("a", "b")], start="b")
    with pytest.raises(UnknownPosition):
        new_gamegraph(["a", "b"], [("a", "b")], start="q")
    assert issubclass(CycleDetected, ValidationError)


def test_option_ids_checked():
    with pytest.raises(ValidationError):
        Rulegraph(["a", "b"], [[5], []])


def test_empty_rulegraph():
    r = Rulegraph([], [])
    assert r.n == 0 and r.arrows() == [] and r.order == ()


def test_duplicate_arrows_collapse():
    r = new_rulegraph(["a", "b"], [("a", "b"), ("a", "b")])
    assert r.arrow_count == 1


def test_long_chain_no_recursion_limit():
    n = 50_000
    r = Rulegraph([str(i) for i in range(n)], [[i - 1] if i else [] for i in range(n)])
    assert r.order[0] == 0 and r.order[-1] == n - 1
    g = Gamegraph(r.labels, r.options)
    assert g.start == n - 1
    assert len(subpositions(g, g.start)) == n


def test_order_is_bottom_up():
    r = con_example()
    seen = set()
    for p in r.order:
        assert set(r.options[p]) <= seen
        seen.add(p)


def test_sources_terminals_and_start():
    r = con_example()
    assert {r.labels[p] for p in sources(r)} == {"1", "2"}
    assert {r.labels[p] for p in terminals(r)} == {"5", "6"}
    g = star(3)
    assert g.labels[g.start] == "3"


def test_induced_gamegraph_and_gamma():
    r = con_example()
    g = induced_gamegraph(r, r.id_of("3"))
    assert sorted(g.labels) == ["3", "5", "6"] and g.labels[g.start] == "3"
    assert len(gamma(r)) == 6
    sub, old = induced_subgraph(r, [r.id_of("3"), r.id_of("5")])
    assert sub.n == 2 and sub.arrow_count == 1 and [r.labels[p] for p in old] == ["3", "5"]


def test_as_gamegraph():
    r = new_rulegraph(["a", "b"], [("a", "b")])
    g = as_gamegraph(r)
    assert isinstance(g, Gamegraph) and g.labels[g.start] == "a"
    assert as_gamegraph(g) is g
    with pytest.raises(MultipleSources):
        as_gamegraph(con_example())


def test_equality_is_structural_and_typed():
    a = new_rulegraph(["a", "b"], [("a", "b")])
    b = new_rulegraph(["a", "b"], [("a", "b")])
    assert a == b and hash(a) == hash(b)
    assert a != as_gamegraph(a)
    assert a.as_rulegraph() == as_gamegraph(a).as_rulegraph()


def test_relabel_and_lookup():
    r = new_rulegraph(["a", "b"], [("a", "b")]).relabel(["x", "y"])
    assert r.id_of("y") == 1 and r.label(0) == "x" and r.opt(0) == (1,)
    with pytest.raises(UnknownPosition):
        r.id_of("a")
    with pytest.raises(UnknownPosition):
        r.check_position(7)


def test_random_constructors_always_valid():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randint(0, 12)
        r = random_rulegraph(rng, n, rng.random())
        Rulegraph(r.labels, r.options)  # revalidates
        if n:
            g = random_gamegraph(rng, n, rng.random())
            assert len(sources(g)) == 1 and g.n == n


def test_fuzz_arbitrary_arrows_never_accept_cycles():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 7)
        labels = [f"p{i}" for i in range(n)]
        arrows = [(rng.choice(labels), rng.choice(labels)) for _ in range(rng.randint(0, 12))]
        try:
            r = new_rulegraph(labels, arrows)
        except ValidationError:
            continue
        # accepted graphs really are acyclic: every walk is shorter than n
        frontier = set(r.positions())
        for _ in range(n):
            frontier = {q for p in frontier for q in r.options[p]}
        assert not frontier
