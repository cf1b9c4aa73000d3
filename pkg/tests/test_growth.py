import pytest
from hypothesis import given, settings

from bpdrsk.biword import PlacticBiword
from bpdrsk.growth import (
    CompatibleSequence,
    InvariantBreach,
    MalformedSquare,
    NotReduced,
    PipeDream,
    audit_squares,
    compatible_sequence,
    growth_by_insertion,
    growth_by_rules,
    local_rule,
    pipe_dream,
    rightmost_chain,
    w_restrict,
)
from bpdrsk.perm import Permutation, decompose_decreasing, product, simple

from conftest import EXAMPLE_CELLS, plactic_biwords

P = Permutation.parse
ID = Permutation.identity()


def reading_word_oracle(crosses):
    """Rows top to bottom, right to left within a row; a cross at (r, c) is s_{r+c-1}."""
    word = [r + c - 1 for r, c in sorted(crosses, key=lambda rc: (rc[0], -rc[1]))]
    return product(word)


def test_w_restrict(example):
    assert w_restrict(example, 1, 4) == PlacticBiword.parse("3,2/3,2")
    assert w_restrict(example, 3, 5) == PlacticBiword.parse("/")
    assert w_restrict(example, 0, 5) == example


@pytest.mark.parametrize("build", [growth_by_insertion, growth_by_rules])
def test_example_matrix(example, build):
    g = build(example)
    assert (g.a, g.ell) == (3, 5)
    assert g.text_cells() == EXAMPLE_CELLS
    assert [p.format(5) for p in rightmost_chain(g)] == ["12345", "12435", "13425", "25314"]


def test_methods_render_identically(example):
    g1, g2 = growth_by_insertion(example), growth_by_rules(example)
    assert g1 == g2
    assert g1.render_ascii() == g2.render_ascii()
    assert g1.to_json() == g2.to_json()


def test_ascii_layout(example):
    lines = growth_by_rules(example).render_ascii().splitlines()
    assert lines[0].split() == ["12345"] * 6
    assert lines[-2].split() == EXAMPLE_CELLS[0]
    assert lines[-3].split() == ["x3", "x2", "x1"]


def test_json_schema(example):
    data = growth_by_rules(example).to_json()
    assert set(data) == {"a", "ell", "cells", "subs", "xrows", "chain", "compatible", "pipe_dream"}
    assert data["subs"] == [3, 3, 2, 2, 1] and data["xrows"] == [1, 3, 1, 2, 1]
    assert data["compatible"] == {"a": [4, 3, 1, 2, 3], "r": [1, 1, 1, 2, 3]}


def test_empty_biword():
    for build in (growth_by_insertion, growth_by_rules):
        g = build(PlacticBiword())
        assert g.cells == [[ID]]
        assert compatible_sequence(g) == CompatibleSequence()
        assert pipe_dream(compatible_sequence(g)).permutation() == ID


@pytest.mark.parametrize("b, k", [(1, 1), (2, 3), (3, 3), (1, 4)])
def test_single_letter_column(b, k):
    g = growth_by_insertion(PlacticBiword(((b, k),)))
    assert [g[i, 1] for i in range(g.a + 1)] == [simple(k)] * b + [ID] * (g.a + 1 - b)
    assert g == growth_by_rules(PlacticBiword(((b, k),)))


def test_rule_without_x():
    rho = local_rule(P("12435"), P("13524"), P("13425"), 2, False)
    assert rho == P("15324")


def test_rule_with_x():
    rho = local_rule(P("13425"), P("15324"), P("13425"), 1, True)
    assert rho == P("25314")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rule_with_x_on_identity(k):
    assert local_rule(ID, ID, ID, k, True) == simple(k)


def test_trivial_rules():
    a, b = P("2143"), P("3142")
    assert local_rule(a, b, a, 2, False) == b
    assert local_rule(a, a, b, 2, False) == b


def test_malformed_squares():
    with pytest.raises(MalformedSquare):
        local_rule(ID, P("21"), P("21"), 1, True)
    with pytest.raises(MalformedSquare):
        # sigma is not a transposition away from pi
        local_rule(ID, P("21"), P("231"), 1, False)
    with pytest.raises(MalformedSquare):
        # the transposition does not straddle k
        local_rule(ID, P("21"), P("132"), 1, False)


def test_compatible_sequence_of_example(example):
    g = growth_by_rules(example)
    cs = compatible_sequence(g)
    assert cs.a_seq == (4, 3, 1, 2, 3) and cs.r_seq == (1, 1, 1, 2, 3)
    assert decompose_decreasing(g[0, 5] * g[1, 5].inverse()) == [4, 3, 1]
    pd = pipe_dream(cs)
    assert pd.sorted_crosses() == [(1, 1), (1, 3), (1, 4), (2, 1), (3, 1)]
    assert pd.permutation() == P("25314") == reading_word_oracle(pd.crosses)
    assert pd.is_reduced()


def test_single_cross_pipe_dream():
    for k in range(1, 5):
        pd = pipe_dream(CompatibleSequence((k,), (1,)))
        assert pd.crosses == {(1, k)}
        assert pd.permutation() == simple(k)


@pytest.mark.parametrize("a, r", [
    ((1, 1), (1, 1)),        # not reduced
    ((2,), (3,)),            # r above a
    ((1, 2), (1, 1)),        # ascent in a without an ascent in r
    ((2, 1), (2, 1)),        # r decreases
])
def test_bad_compatible_sequences(a, r):
    cs = CompatibleSequence(a, r)
    assert cs.violations()
    with pytest.raises(InvariantBreach):
        cs.check()


def test_reducedness():
    pd = PipeDream(frozenset({(1, 1), (2, 1), (1, 2)}))
    assert pd.permutation() == reading_word_oracle(pd.crosses)
    assert pd.permutation().length() == 3 and pd.is_reduced()
    # both crosses read as s_2, so the two pipes cross twice
    double = PipeDream(frozenset({(1, 2), (2, 1)}))
    assert double.permutation() == reading_word_oracle(double.crosses) == ID
    assert not double.is_reduced()


def test_not_reduced_error():
    with pytest.raises((NotReduced, InvariantBreach)):
        pipe_dream(CompatibleSequence((1, 1), (1, 1)))


@settings(max_examples=200, deadline=None)
@given(plactic_biwords(max_k=4, max_len=6))
def test_methods_agree(q):
    g = growth_by_rules(q)
    assert g == growth_by_insertion(q)
    assert audit_squares(g) == []
    cs = compatible_sequence(g)
    pd = pipe_dream(cs)
    assert pd.permutation() == g[0, g.ell] == reading_word_oracle(pd.crosses)


@settings(max_examples=100, deadline=None)
@given(plactic_biwords(max_k=4, max_len=6))
def test_chain_links_are_decreasing(q):
    chain = rightmost_chain(growth_by_rules(q))
    total = 0
    for upper, lower in zip(chain, chain[1:]):
        total += len(decompose_decreasing(lower * upper.inverse()))
    assert total == chain[-1].length()
