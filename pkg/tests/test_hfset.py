import pytest

from gamegraph import (
    HfArena,
    NotMembershipClosed,
    ParseError,
    Rulegraph,
    canonicalize,
    collection_to_rulegraph,
    hf_order,
    m_graph,
    notation,
    star,
    tower2,
)
from gamegraph.hfset import transitive_closure
from figures import redundant_star2


def test_interning_gives_identity():
    arena = HfArena()
    e = arena.empty
    a = arena.intern([e, arena.intern([e])])
    b = arena.intern([arena.intern([e]), e, e])
    assert a is b
    assert len(arena) == 3


def test_star2_canonical_forms():
    g = star(2)
    forms = [notation(h) for h in canonicalize(g)]
    assert forms == ["∅", "{∅}", "{∅,{∅}}"]
    s = redundant_star2()
    assert notation(canonicalize(s)[s.start]) == "{∅,{∅}}"


def test_rank_is_formal_birthday():
    g = star(5)
    assert [h.rank for h in canonicalize(g)] == list(range(6))


def test_order_rank_first_then_lexicographic():
    arena = HfArena()
    e = arena.empty
    one = arena.intern([e])
    two_a = arena.intern([one])          # {{∅}}
    two_b = arena.intern([e, one])       # {∅,{∅}}
    assert hf_order(e, one) < 0 < hf_order(one, e)
    # equal rank: the smallest children are ∅ and {∅}, so {∅,{∅}} comes first
    assert one < two_b < two_a
    assert hf_order(two_b, two_b) == 0
    # a proper prefix is smaller
    prefix = arena.intern([e, two_b])
    longer = arena.intern([e, two_b, two_a])
    assert prefix.rank == longer.rank == 3
    assert prefix < longer
    level = arena.power_set(arena.power_set([e]))
    assert [notation(h) for h in level] == ["∅", "{∅}", "{∅,{∅}}", "{{∅}}"]


def test_order_is_total_and_consistent():
    arena = HfArena()
    sets = arena.power_set(arena.power_set(arena.power_set([arena.empty])))
    assert len(sets) == 16
    for a in sets:
        for b in sets:
            assert (hf_order(a, b) == 0) == (a is b)
            assert hf_order(a, b) == -hf_order(b, a)


def test_parse_roundtrip_and_errors():
    arena = HfArena()
    for text in ["∅", "{∅}", "{∅,{∅}}", "{{∅},{{∅}}}"]:
        assert notation(arena.parse(text)) == text
    assert arena.parse("{{}, {}}") is arena.intern([arena.empty])
    assert arena.parse("{{∅},∅}") is arena.parse("{∅,{∅}}")
    for bad in ["", "{", "{∅", "{∅,}", "x", "{∅}}"]:
        with pytest.raises(ParseError):
            arena.parse(bad)


def test_arenas_do_not_mix():
    a, b = HfArena(), HfArena()
    with pytest.raises(ValueError):
        a.intern([b.empty])
    assert hf_order(a.empty, b.empty) == 0
    assert notation(a.parse("{∅}")) == notation(b.parse("{∅}"))


def test_deep_chain_without_recursion():
    n = 20_000
    r = Rulegraph([str(i) for i in range(n)], [[i - 1] if i else [] for i in range(n)])
    forms = canonicalize(r)
    assert forms[-1].rank == n - 1
    assert len(notation(forms[-1])) == 2 * (n - 1) + 1
    assert hf_order(forms[-1], forms[-2]) > 0


def test_collection_to_rulegraph():
    arena = HfArena()
    top = arena.parse("{∅,{∅}}")
    closed = transitive_closure([top])
    g = collection_to_rulegraph(closed)
    assert list(g.labels) == ["∅", "{∅}", "{∅,{∅}}"]
    assert g.arrow_count == 3
    with pytest.raises(NotMembershipClosed):
        collection_to_rulegraph([top])


@pytest.mark.parametrize("d", range(4))
def test_m_graph_sizes(d):
    assert m_graph(d).n == tower2(d)
