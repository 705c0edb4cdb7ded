import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from avcells.coxcore import Permutation as P, hat_word
from avcells.modinv import (
    MinimalityWitness, corollary_pq_witness, corollary_pq_witnesses, gkdim_from_columns,
    gkdim_of_w, gkdim_weight, highest_weight_of_w, is_minimal_gkdim, is_ordered,
    ordered_after_removal, pq_dominant_indices,
)
from avcells.tableaux import NonIntegralWeight, tableau_of_permutation, weight_to_permutation


def test_gkdim_weight_examples():
    assert gkdim_weight((4, 2, 1, -3)).gkdim == 0
    assert gkdim_weight((-3, 1, 2, 4, 7)).gkdim == 10
    rep = gkdim_weight((1, 4, 9, 0))
    assert (rep.columns, rep.a_value, rep.gkdim) == ((2, 1, 1), 1, 5)
    assert rep.as_record() == {"weight": ["1", "4", "9", "0"], "columns": [2, 1, 1],
                               "a": 1, "gkdim": 5}


def test_gkdim_rejects_non_integral():
    with pytest.raises(NonIntegralWeight):
        gkdim_weight((Fraction(1, 2), 0, 1))


@pytest.mark.parametrize("n", range(2, 7))
def test_gkdim_of_w_examples(n):
    assert gkdim_of_w(P.identity(n)) == n * (n - 1) // 2
    assert gkdim_of_w(P(tuple(range(n, 0, -1)))) == 0
    for k in range(2, n + 1):
        assert gkdim_of_w(hat_word(n, k)) == n - 1


@pytest.mark.parametrize("n", range(2, 6))
def test_gkdim_of_w_matches_highest_weight(n):
    for p in permutations(range(1, n + 1)):
        w = P(p)
        t = highest_weight_of_w(w)
        assert weight_to_permutation(t) == w
        assert gkdim_weight(t).gkdim == gkdim_of_w(w)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=6))
def test_gkdim_formulas_agree(columns):
    columns = sorted(columns, reverse=True)
    n = sum(columns)
    a = sum(c * (c - 1) // 2 for c in columns)
    assert gkdim_from_columns(columns) == n * (n - 1) // 2 - a


def test_is_minimal_examples():
    assert is_minimal_gkdim((5, 4, 2, 1, 3))
    assert not is_minimal_gkdim((5, 4, 2, 1))
    assert is_minimal_gkdim((2, 1, 2, 0))
    with pytest.raises(ValueError):
        is_minimal_gkdim((1,))


def test_pq_dominant_examples():
    assert pq_dominant_indices((9, 5, 4, 0)) == [1, 2, 3]
    assert pq_dominant_indices((5, 4, 2, 1, 3)) == [4]
    assert pq_dominant_indices((1, 5, 4)) == [1]


def test_witness_examples():
    assert corollary_pq_witness((5, 4, 2, 1, 3)) == MinimalityWitness(p=4, i1=3)
    assert corollary_pq_witness((9, 5, 4, 0)) is None
    assert corollary_pq_witness((1, 5, 4)) == MinimalityWitness(p=1, i1=1)


def test_witness_segments_decrease():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(2, 7)
        t = tuple(rng.randint(0, n) for _ in range(n))
        for wit in corollary_pq_witnesses(t):
            p = wit.p
            assert all(a > b for a, b in zip(t[:p], t[1:p]))
            assert all(a > b for a, b in zip(t[p:], t[p + 1:]))


def test_ordered_after_removal_examples():
    assert ordered_after_removal((5, 4, 2, 1, 3)) == {5}
    assert ordered_after_removal((2, 1, 2, 0)) == {3}
    assert ordered_after_removal((4, 3, 1)) is None
    assert ordered_after_removal((1, 2, 3, 4)) is None


def test_is_ordered():
    assert is_ordered((3, 2, 1))
    assert not is_ordered((3, 3, 1))
    assert not is_ordered((Fraction(3, 2), 1))


@pytest.mark.parametrize("n", range(2, 6))
def test_four_routes_agree_exhaustively(n):
    for t in product(range(n + 1), repeat=n):
        verdicts = {
            gkdim_weight(t).gkdim == n - 1,
            is_minimal_gkdim(t),
            corollary_pq_witness(t) is not None,
            ordered_after_removal(t) is not None,
        }
        assert len(verdicts) == 1, t


def test_minimal_weights_match_hat_tableaux():
    # tableau side of the minimal-GK classification, n = 5
    n = 5
    hats = {tableau_of_permutation(hat_word(n, k)) for k in range(2, n + 1)}
    count = 0
    for p in permutations(range(1, n + 1)):
        w = P(p)
        minimal = gkdim_of_w(w) == n - 1
        assert minimal == (tableau_of_permutation(w) in hats)
        count += minimal
    assert count == (n - 1) ** 2


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7), st.fractions())
def test_predicates_shift_invariant(t, c):
    s = tuple(x + c for x in t)
    assert is_minimal_gkdim(s) == is_minimal_gkdim(t)
    assert pq_dominant_indices(s) == pq_dominant_indices(t)
    assert corollary_pq_witnesses(s) == corollary_pq_witnesses(t)
    assert ordered_after_removal(s) == ordered_after_removal(t)
