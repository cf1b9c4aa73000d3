import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bpdrsk.perm import (
    NotDecreasing,
    Permutation,
    decompose_decreasing,
    product,
    simple,
    transposition,
)

P = Permutation.parse


def brute_length(line):
    return sum(1 for i, j in itertools.combinations(range(len(line)), 2) if line[i] > line[j])


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_trailing_fixed_points_are_dropped():
    assert P("12345") == Permutation.identity()
    assert P("21345") == P("21")
    assert P("21").one_line(4) == (2, 1, 3, 4)


def test_text_forms():
    assert str(P("25314")) == "25314"
    assert str(Permutation.identity()) == "1"
    assert P("2,1").format(3) == "213"
    big = Permutation(tuple([2, 1] + list(range(3, 10)) + [11, 10]))
    assert str(big) == "2,1,3,4,5,6,7,8,9,11,10"
    assert P(str(big)) == big


def test_not_a_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1))


@pytest.mark.parametrize("alpha, beta, before, after", [
    (3, 5, "13524", "15324"),
    (1, 2, "15324", "25314"),
    (1, 2, "1", "21"),
])
def test_left_transposition_swaps_values(alpha, beta, before, after):
    assert str(P(before).transpose_values(alpha, beta)) == after
    assert transposition(alpha, beta) * P(before) == P(after)


def test_composition_convention():
    p, q = P("231"), P("213")
    assert (p * q).one_line(3) == tuple(p(q(i)) for i in (1, 2, 3))


@pytest.mark.parametrize("text, fd", [("12435", 3), ("21", 1), ("", math.inf)])
def test_first_descent(text, fd):
    assert P(text).first_descent() == fd


def test_length_of_example():
    assert P("25314").length() == 5


@given(perms)
def test_length_matches_inversion_count(p):
    assert p.length() == brute_length(p.images)


@given(perms, st.integers(1, 8), st.integers(1, 8))
def test_transposition_changes_length_parity(p, a, b):
    if a == b:
        return
    q = p.transpose_values(a, b)
    assert (q.length() - p.length()) % 2 == 1
    assert q.transpose_values(a, b) == p


@given(perms)
def test_inverse(p):
    assert (p * p.inverse()).is_identity()


def test_left_descent():
    assert P("21").is_left_descent(1)
    assert not P("12").is_left_descent(1)
    # s_1 * 231 = 132 is shorter
    assert P("231").is_left_descent(1)


def test_decompose_examples():
    assert decompose_decreasing(P("21534")) == [4, 3, 1]
    assert product([4, 3, 1]) == P("21534")
    assert decompose_decreasing(Permutation.identity()) == []
    with pytest.raises(NotDecreasing):
        decompose_decreasing(P("321"))


def test_decompose_exhaustive_on_small_indices():
    reached = set()
    for size in range(7):
        for subset in itertools.combinations(range(6, 0, -1), size):
            w = product(subset)
            reached.add(w)
            assert decompose_decreasing(w) == list(subset)
    # everything else in S_7 has no decreasing factorisation
    for line in itertools.permutations(range(1, 8)):
        p = Permutation(line)
        if p not in reached:
            with pytest.raises(NotDecreasing):
                decompose_decreasing(p)


def test_simple():
    assert simple(2) == P("132")
