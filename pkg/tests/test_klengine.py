from itertools import permutations

import pytest

from avcells import oracles
from avcells.coxcore import (
    DihedralElement, DihedralGroup, Permutation as P, SymmetricGroup, bruhat_leq,
    inverse, length,
)
from avcells.klengine import (
    CacheError, KLTable, NotBruhatComparable, cells, kl_polynomial, kl_table,
    left_equivalent, mu, poly_str, right_equivalent, two_sided_equivalent,
)
from avcells.tableaux import tableau_of_permutation

S3, S4, S5 = SymmetricGroup(3), SymmetricGroup(4), SymmetricGroup(5)


def pairs(model, table):
    for w in model.elements():
        for x in model.elements():
            if bruhat_leq(x, w, model):
                yield x, w, table.polynomial(x, w)


def test_poly_str():
    assert poly_str((1,)) == "1"
    assert poly_str((1, 1)) == "1+q"
    assert poly_str(()) == "0"


@pytest.mark.parametrize("model", [S3, S4, DihedralGroup(6)])
def test_diagonal_is_one(model):
    table = kl_table(model)
    assert all(table.polynomial(w, w) == (1,) for w in model.elements())


def test_s3_all_one():
    table = kl_table(S3)
    assert {p for _, _, p in pairs(S3, table)} == {(1,)}


def test_s4_spot_value():
    table = kl_table(S4)
    x, w = P((1, 3, 2, 4)), P((3, 4, 1, 2))
    assert kl_polynomial(table, x, w) == (1, 1)
    assert oracles.kl_polynomial_from_r(x.one_line, w.one_line) == (1, 1)
    values = {p for _, _, p in pairs(S4, table)}
    assert values == {(1,), (1, 1)}


@pytest.mark.parametrize("model", [S3, S4])
def test_engine_matches_r_polynomial_oracle(model):
    table = kl_table(model)
    for x, w, p in pairs(model, table):
        assert oracles.kl_polynomial_from_r(x.one_line, w.one_line) == p, (x, w)


@pytest.mark.parametrize("model", [S4, S5, DihedralGroup(5)])
def test_polynomial_invariants(model):
    table = kl_table(model)
    for x, w, p in pairs(model, table):
        assert p[0] == 1
        assert all(c >= 0 for c in p)
        assert p[-1] != 0
        if x != w:
            assert 2 * (len(p) - 1) <= model.length(w) - model.length(x) - 1


def test_mu_examples():
    t3, t4 = kl_table(S3), kl_table(S4)
    assert mu(t3, P.identity(3), P((3, 2, 1))) == 0
    assert mu(t4, P((1, 3, 2, 4)), P((3, 4, 1, 2))) == 1
    for x in S4.elements():
        for w in S4.elements():
            if length(w) - length(x) == 1 and bruhat_leq(x, w):
                assert mu(t4, x, w) == 1


def test_not_comparable():
    table = kl_table(S3)
    with pytest.raises(NotBruhatComparable):
        table.polynomial(P((2, 3, 1)), P((3, 1, 2)))
    with pytest.raises(NotBruhatComparable):
        table.polynomial(P((3, 2, 1)), P.identity(3))


def test_cell_counts():
    right3 = cells(S3, "right")
    assert sorted(len(b) for b in right3.blocks()) == [1, 1, 2, 2]
    assert [len(cells(m, "right")) for m in (S3, S4, S5)] == [4, 10, 26]
    assert [len(cells(m, "two-sided")) for m in (S3, S4, S5)] == [3, 5, 7]


def test_dihedral_cells():
    g = DihedralGroup(6)
    left = cells(g, "left")
    assert sorted(len(b) for b in left.blocks()) == [1, 1, 5, 5]
    assert frozenset({g.identity()}) in left.as_sets()
    assert frozenset({DihedralElement(6, 6)}) in left.as_sets()
    assert len(cells(g, "two-sided")) == 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_right_cells_are_insertion_fibers(n):
    model = SymmetricGroup(n)
    part = cells(model, "right")
    for w in model.elements():
        for y in model.elements():
            same = tableau_of_permutation(w) == tableau_of_permutation(y)
            assert (part.cell_id(w) == part.cell_id(y)) == same


@pytest.mark.parametrize("model", [S4, S5])
def test_left_cells_are_inverse_right_cells(model):
    right, left = cells(model, "right"), cells(model, "left")
    for w in model.elements():
        for y in model.elements():
            assert (left.cell_id(w) == left.cell_id(y)) == (
                right.cell_id(inverse(w)) == right.cell_id(inverse(y)))


def test_two_sided_coarsens_one_sided():
    two = cells(S5, "two-sided")
    for side in ("left", "right"):
        for block in cells(S5, side).blocks():
            assert len({two.cell_id(w) for w in block}) == 1


def test_equivalence_helpers():
    w = P((4, 3, 1, 2))
    assert right_equivalent(S4, w, w) and left_equivalent(S4, w, w)
    assert two_sided_equivalent(S4, w, w)
    assert not right_equivalent(S3, P((2, 1, 3)), P((1, 3, 2)))
    assert left_equivalent(S3, P((2, 1, 3)), P((3, 1, 2)))


def test_cache_round_trip(tmp_path):
    path = tmp_path / "s4.klc"
    table = KLTable(S4)
    table.save(path)
    again = KLTable(S4, cache=path)
    assert again._p == table._p
    assert again.cells("right").as_sets() == table.cells("right").as_sets()
    second = tmp_path / "s4b.klc"
    again.save(second)
    assert second.read_bytes() == path.read_bytes()


def test_cache_errors(tmp_path):
    path = tmp_path / "c.klc"
    KLTable(S3).save(path)
    with pytest.raises(CacheError):
        KLTable(S4, cache=path)
    lines = path.read_text().splitlines()
    bad = tmp_path / "bad.klc"
    bad.write_text("NOTACACHE\n")
    with pytest.raises(CacheError):
        KLTable(S3, cache=bad)
    bad.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(CacheError):
        KLTable(S3, cache=bad)
    bad.write_text(lines[0] + "\n9,9,9;1,2,3;1\n")
    with pytest.raises(CacheError):
        KLTable(S3, cache=bad)
