"""Property-based checks with hypothesis over small random rulegraphs."""

import random
from functools import cmp_to_key

from hypothesis import given, settings
from hypothesis import strategies as st

from gamegraph import (
    Gamegraph,
    HfArena,
    Rulegraph,
    are_isomorphic,
    box_sum,
    canonicalize,
    check_option_preserving,
    evaluate,
    greedy_min_quotient,
    hf_order,
    image_rulegraph,
    is_congruence,
    is_simple,
    kernel,
    max_congruence,
    min_quotient,
    nim_values,
    outcome_normal,
    parse_graph,
    quotient,
    serialize_graph,
    subpositions,
)
from gamegraph.enumeration import _greater
from gamegraph.valuation import BUILTIN
from helpers import random_map

SETTINGS = settings(max_examples=200, deadline=None)


@st.composite
def rulegraphs(draw, max_n=8, gamegraph=False):
    n = draw(st.integers(1 if gamegraph else 0, max_n))
    rank = draw(st.permutations(list(range(n))))
    options = []
    for p in range(n):
        lower = [q for q in range(n) if rank[q] < rank[p]]
        options.append([q for q in lower if draw(st.booleans())])
    labels = [f"v{i}" for i in range(n)]
    if gamegraph:
        probe = Rulegraph(labels, options)
        has_pred = {q for o in probe.options for q in o}
        tops = [p for p in range(n) if p not in has_pred]
        if len(tops) > 1:
            labels.append("top")
            options.append(tops)
        return Gamegraph(labels, options)
    return Rulegraph(labels, options)


@SETTINGS
@given(rulegraphs(6, gamegraph=True), rulegraphs(6, gamegraph=True))
def test_nim_sum_law(g, h):
    s = box_sum(g, h)
    assert nim_values(s)[s.start] == nim_values(g)[g.start] ^ nim_values(h)[h.start]


@SETTINGS
@given(rulegraphs())
def test_normal_outcome_matches_nim_zero(r):
    nim = nim_values(r)
    out = outcome_normal(r)
    assert all((out[p] == "P") == (nim[p] == 0) for p in r.positions())


@SETTINGS
@given(rulegraphs())
def test_min_quotient_is_simple_and_maximal(r):
    q = min_quotient(r)
    assert is_simple(q.graph)
    assert check_option_preserving(q.projection)
    top = max_congruence(r)
    for block in top.blocks:
        for p in block:
            # nothing is related to one of its proper subpositions
            assert not (set(block) & (subpositions(r, p) - {p}))


@SETTINGS
@given(rulegraphs(), st.integers(0, 2 ** 32))
def test_greedy_merges_reach_min_quotient(r, seed):
    assert are_isomorphic(greedy_min_quotient(r, random.Random(seed)), min_quotient(r).graph)


@SETTINGS
@given(rulegraphs())
def test_serialization_round_trip(r):
    again, _ = parse_graph(serialize_graph(r))
    assert again == r


@SETTINGS
@given(st.integers(0, 2 ** 32))
def test_random_maps_preserve_valuations_and_kernels(seed):
    rng = random.Random(seed)
    alpha = random_map(rng, max_n=8)
    assert check_option_preserving(alpha)
    for mu in BUILTIN.values():
        dv = evaluate(alpha.domain, mu).values
        cv = evaluate(alpha.codomain, mu).values
        assert all(dv[p] == cv[alpha(p)] for p in alpha.domain.positions())
    k = kernel(alpha)
    assert is_congruence(alpha.domain, k)
    image, _ = image_rulegraph(alpha)
    assert are_isomorphic(quotient(alpha.domain, k).graph, image)


@SETTINGS
@given(rulegraphs(7))
def test_bitmask_order_matches_canonical_order(r):
    """The comparison used by the enumeration agrees with the set order."""
    arena = HfArena()
    forms = sorted(set(canonicalize(r, arena)), key=lambda h: h.uid)
    ordered = sorted(forms, key=cmp_to_key(hf_order))
    index = {h: i for i, h in enumerate(ordered)}
    ranks = [h.rank for h in ordered]
    masks = [sum(1 << index[c] for c in h.children) for h in ordered]
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            assert _greater(masks[i], masks[j], ranks) == (hf_order(a, b) > 0)
