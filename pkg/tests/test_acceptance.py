"""Acceptance criteria 1-9, each checked exactly at its stated range.

Run ``pytest tests/test_acceptance.py -v`` (add ``--big`` for the n = 6 engine
run); a PASS/FAIL line per criterion is printed in the terminal summary.
"""

import time
from collections import defaultdict
from fractions import Fraction

import pytest

from avcells import oracles, verify
from avcells.coxcore import (
    DihedralGroup, Permutation as P, SymmetricGroup, act_on_weight, bruhat_leq, hat_word,
    inverse, rho,
)
from avcells.klengine import KLTable, cells, kl_table, right_equivalent
from avcells.modinv import gkdim_of_w
from avcells.tableaux import rank_word, tableau_of_permutation
from avcells.varieties import (
    SimpleRootClosure, annihilators_equal, minimal_variety_of_weight, orbit_dim,
    orbital_variety_label, steinberg_orbit,
)


def fibers(elements, key):
    groups = defaultdict(set)
    for w in elements:
        groups[key(w)].add(w)
    return {frozenset(g) for g in groups.values()}


def assert_ok(report):
    assert report.ok, f"{len(report.failures)} failures, first: {report.failures[:3]}"


def right_cells_match_insertion(n):
    model = SymmetricGroup(n)
    table = KLTable(model)
    expected = fibers(model.elements(), tableau_of_permutation)
    assert table.cells("right").as_sets() == expected, f"S{n}: right cells != insertion fibers"


def test_1_engine_right_cells(criterion):
    with criterion("1", "KL right cells = insertion-tableau fibers, n = 3,4,5"):
        start = time.perf_counter()
        for n in (3, 4, 5):
            right_cells_match_insertion(n)
        assert time.perf_counter() - start < 60


@pytest.mark.slow
def test_1_engine_right_cells_n6(criterion):
    with criterion("1b", "KL right cells = insertion-tableau fibers, n = 6 (--big)"):
        start = time.perf_counter()
        right_cells_match_insertion(6)
        assert time.perf_counter() - start < 30 * 60


def test_2_cell_counts(criterion):
    with criterion("2", "cell counts in S3..S5 and I2(6)"):
        groups = [SymmetricGroup(n) for n in (3, 4, 5)]
        assert [len(cells(g, "right")) for g in groups] == [4, 10, 26]
        assert [len(cells(g, "two-sided")) for g in groups] == [3, 5, 7]
        # independent counts: involutions for one-sided cells, partitions for two-sided
        assert [oracles.count_involutions(n) for n in (3, 4, 5)] == [4, 10, 26]
        assert [oracles.count_partitions(n) for n in (3, 4, 5)] == [3, 5, 7]
        i26 = DihedralGroup(6)
        assert len(cells(i26, "left")) == 4
        assert len(cells(i26, "two-sided")) == 3


def test_3_kl_spot_values(criterion):
    with criterion("3", "KL spot values in S3 and S4, R-polynomial oracle"):
        for n, expected in ((3, {(1,)}), (4, {(1,), (1, 1)})):
            model = SymmetricGroup(n)
            table = kl_table(model)
            values = set()
            for w in model.elements():
                for x in model.elements():
                    if bruhat_leq(x, w):
                        p = table.polynomial(x, w)
                        assert p == oracles.kl_polynomial_from_r(x.one_line, w.one_line), (x, w)
                        values.add(p)
            assert values == expected, f"S{n}: polynomial values {values}"
        x, w = P((1, 3, 2, 4)), P((3, 4, 1, 2))
        assert kl_table(SymmetricGroup(4)).polynomial(x, w) == (1, 1)
        assert oracles.kl_polynomial_from_r(x.one_line, w.one_line) == (1, 1)


def test_4_minimal_gkdim_permutations(criterion):
    with criterion("4", "GKdim n-1 elements = hat fibers, (n-1)^2 of them, n <= 7"):
        start = time.perf_counter()
        for n in range(2, 8):
            hats = {tableau_of_permutation(hat_word(n, k)) for k in range(2, n + 1)}
            minimal = {w for w in SymmetricGroup(n).elements() if gkdim_of_w(w) == n - 1}
            in_fibers = {w for w in SymmetricGroup(n).elements() if tableau_of_permutation(w) in hats}
            assert minimal == in_fibers, f"S{n}"
            assert len(minimal) == (n - 1) ** 2, f"S{n}: {len(minimal)}"
            for k in range(2, n + 1):
                assert orbital_variety_label(hat_word(n, k)) == SimpleRootClosure(k - 1)
        assert_ok(verify.run("thm2"))
        assert time.perf_counter() - start < 60


def test_5_weight_characterisations(criterion):
    with criterion("5", "four minimality tests agree on 10^4 weights per n, 2 <= n <= 8"):
        start = time.perf_counter()
        report = verify.run("corollaries", samples=10_000, seed=0)
        assert report.params["n"] == list(range(2, 9))
        assert report.checked == 7 * 10_000
        assert_ok(report)
        assert time.perf_counter() - start < 60


def test_6_worked_examples(criterion):
    with criterion("6", "worked examples: rank words, -hat(5,3) rho, Balpha(2)"):
        assert rank_word((1, 4, 9, 0)) == P((2, 3, 4, 1))
        assert rank_word((1, 4, 9, 1, 0)) == P((2, 4, 5, 3, 1))
        t = tuple(-x for x in act_on_weight(hat_word(5, 3), rho(5)))
        assert t == tuple(Fraction(x) for x in (1, 0, 2, -1, -2))
        assert minimal_variety_of_weight(t) == SimpleRootClosure(2)
        assert str(minimal_variety_of_weight(t)) == "Balpha(2)"
        assert orbital_variety_label(hat_word(5, 3)) == SimpleRootClosure(2)


def test_7_richardson(criterion):
    with criterion("7", "Richardson elements for all compositions, n <= 8"):
        start = time.perf_counter()
        report = verify.run("thm3")
        assert report.params["n"] == list(range(2, 9))
        assert report.checked == sum(2 ** (n - 1) for n in range(2, 9))
        assert_ok(report)
        assert time.perf_counter() - start < 60


def test_8_steinberg(criterion):
    with criterion("8", "orbit dim = 2 GKdim (n <= 6); orbit fibers = two-sided cells (n <= 5)"):
        for n in range(2, 7):
            for w in SymmetricGroup(n).elements():
                assert orbit_dim(steinberg_orbit(w), n) == 2 * gkdim_of_w(w), w
        for n in (3, 4, 5):
            model = SymmetricGroup(n)
            assert cells(model, "two-sided").as_sets() == fibers(model.elements(), steinberg_orbit)


def test_9_annihilators(criterion):
    with criterion("9", "annihilator fibers = left cells; = right cells of inverses (n <= 5)"):
        for n in (3, 4, 5):
            model = SymmetricGroup(n)
            elems = model.elements()
            left = cells(model, "left")
            for w in elems:
                for y in elems:
                    eq = annihilators_equal(w, y)
                    assert eq == (left.cell_id(w) == left.cell_id(y)), (w, y)
                    assert eq == right_equivalent(model, inverse(w), inverse(y)), (w, y)
