"""
Labels for nilpotent orbits and orbital varieties in type A.

The orbit attached to ``w`` has Jordan type equal to the row shape of the
insertion tableau of ``w``. An orbital variety is named by the insertion
tableau of ``w`` (one name per right cell), with two specialisations:

* ``Balpha(p)``, the closure of ``B . e_alpha_p``, when the shape is the
  minimal one ``(2, 1, ..., 1)``;
* ``nilradical(I=...)``, the nilradical ``u_I``, when ``w`` shares its
  tableau with a longest element ``w_I`` of a proper parabolic subgroup.

The first rule wins where both apply (``u_I`` for blocks ``(1, n-1)`` or
``(n-1, 1)`` is itself a minimal orbital variety).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from .coxcore import ParabolicSubset, Permutation, hat_word, inverse, parabolic_longest
from .modinv import gkdim_from_columns, gkdim_weight, is_minimal_gkdim
from .tableaux import (
    Partition, YoungTableau, _check_integral, dual_partition,
    tableau_of_permutation, weight_to_permutation,
)

__all__ = [
    "NilpotentOrbitLabel", "SimpleRootClosure", "Nilradical", "TableauLabel",
    "VarietyLabel", "RichardsonData", "PreconditionError", "steinberg_orbit",
    "orbit_dim", "orbital_variety_label", "minimal_variety_of_weight",
    "richardson_data", "max_gkdim_variety", "annihilators_equal",
    "label_dim", "parse_label", "hat_label_index",
]


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class NilpotentOrbitLabel:
    jordan_type: Partition

    @property
    def n(self) -> int:
        return sum(self.jordan_type)

    def dim(self) -> int:
        return orbit_dim(self, self.n)

    def __str__(self) -> str:
        return ",".join(map(str, self.jordan_type))


@dataclass(frozen=True)
class SimpleRootClosure:
    p: int

    def __str__(self) -> str:
        return f"Balpha({self.p})"


@dataclass(frozen=True)
class Nilradical:
    subset: ParabolicSubset

    def __str__(self) -> str:
        return f"nilradical(I={self.subset})"


@dataclass(frozen=True)
class TableauLabel:
    tableau: YoungTableau

    def __str__(self) -> str:
        return f"tableau({self.tableau})"


VarietyLabel = Union[SimpleRootClosure, Nilradical, TableauLabel]


def parse_label(text: str, n: int) -> VarietyLabel:
    text = text.strip()
    if text.startswith("Balpha(") and text.endswith(")"):
        return SimpleRootClosure(int(text[7:-1]))
    if text.startswith("nilradical(I=") and text.endswith(")"):
        return Nilradical(ParabolicSubset.parse(text[13:-1], n))
    if text.startswith("tableau(") and text.endswith(")"):
        return TableauLabel(YoungTableau.parse(text[8:-1]))
    raise ValueError(f"not a variety label: {text!r}")


def label_dim(label: VarietyLabel, n: int) -> int:
    """Dimension of the labelled variety (half the dimension of its orbit)."""
    if isinstance(label, SimpleRootClosure):
        return n - 1
    if isinstance(label, Nilradical):
        return _dim_u(label.subset.blocks)
    return gkdim_from_columns(label.tableau.column_lengths())


def orbit_dim(orbit: NilpotentOrbitLabel, n: int) -> int:
    """``n^2 - sum of squared dual parts``."""
    if sum(orbit.jordan_type) != n:
        raise ValueError(f"{orbit.jordan_type} is not a partition of {n}")
    return n * n - sum(c * c for c in dual_partition(orbit.jordan_type))


def steinberg_orbit(w: Permutation) -> NilpotentOrbitLabel:
    return NilpotentOrbitLabel(tableau_of_permutation(w).shape())


def _minimal_shape(n: int) -> Partition:
    return (2,) + (1,) * (n - 2)


def _second_column_rank(tab: YoungTableau) -> int:
    """Position of the lone second-column entry in the merged sorted sequence."""
    first, (s,) = tab.columns()
    return sum(1 for x in first if x <= s) + 1


def _proper_subsets(n: int):
    gens = range(1, n)
    for r in range(n - 1):
        for combo in combinations(gens, r):
            yield ParabolicSubset(n, frozenset(combo))


def orbital_variety_label(w: Permutation) -> VarietyLabel:
    n = w.n
    tab = tableau_of_permutation(w)
    if n >= 2 and tab.shape() == _minimal_shape(n):
        return SimpleRootClosure(_second_column_rank(tab) - 1)
    # only w_I with the right shape can match
    cols = tab.column_lengths()
    for subset in _proper_subsets(n):
        if tuple(sorted(subset.blocks, reverse=True)) == cols and \
                tableau_of_permutation(parabolic_longest(subset)) == tab:
            return Nilradical(subset)
    return TableauLabel(tab)


def minimal_variety_of_weight(t: Sequence) -> SimpleRootClosure:
    """``Balpha(p)`` for a weight of minimal GK dimension.

    The lone second-column entry of ``T(w_lambda)`` sits at position ``k`` of
    the merged column; then ``p = k - 1``.
    """
    wt = _check_integral(t)
    if len(wt) < 2 or not is_minimal_gkdim(wt):
        raise PreconditionError(f"weight {tuple(map(str, wt))} does not have GK dimension n-1")
    tab = tableau_of_permutation(weight_to_permutation(wt))
    return SimpleRootClosure(_second_column_rank(tab) - 1)


def _dim_u(blocks: Sequence[int]) -> int:
    n = sum(blocks)
    return (n * n - sum(b * b for b in blocks)) // 2


@dataclass(frozen=True)
class RichardsonData:
    subset: ParabolicSubset
    blocks: tuple[int, ...]
    dim_u: int
    w_I: Permutation
    orbit: NilpotentOrbitLabel


def richardson_data(subset: ParabolicSubset) -> RichardsonData:
    blocks = subset.blocks
    orbit = NilpotentOrbitLabel(dual_partition(sorted(blocks, reverse=True)))
    return RichardsonData(subset, blocks, _dim_u(blocks), parabolic_longest(subset), orbit)


def max_gkdim_variety(t: Sequence, subset: ParabolicSubset) -> Nilradical:
    """``u_I`` for a module of maximal GK dimension in the parabolic category of ``I``."""
    wt = _check_integral(t)
    if len(wt) != subset.n:
        raise ValueError(f"rank mismatch: {len(wt)} != {subset.n}")
    for block in subset.block_ranges():
        seg = [wt[i - 1] for i in block]
        if not all(a - b > 0 for a, b in zip(seg, seg[1:])):
            raise PreconditionError(f"weight is not dominant regular on block {list(block)}")
    data = richardson_data(subset)
    gk = gkdim_weight(wt).gkdim
    if gk != data.dim_u:
        raise PreconditionError(f"GK dimension {gk} is not maximal ({data.dim_u})")
    shape = tableau_of_permutation(weight_to_permutation(wt)).shape()
    if shape != data.orbit.jordan_type:
        raise AssertionError(f"tableau shape {shape} differs from Richardson orbit {data.orbit}")
    return Nilradical(subset)


def annihilators_equal(w: Permutation, y: Permutation) -> bool:
    """Equal primitive ideals, i.e. ``w`` and ``y`` in the same left cell."""
    if w.n != y.n:
        raise ValueError(f"rank mismatch: {w.n} != {y.n}")
    return tableau_of_permutation(inverse(w)) == tableau_of_permutation(inverse(y))


def hat_label_index(w: Permutation) -> int | None:
    """``k`` with ``T(w) = T(hat_word(n, k))``, if any."""
    tab = tableau_of_permutation(w)
    if w.n < 2 or tab.shape() != _minimal_shape(w.n):
        return None
    k = _second_column_rank(tab)
    assert tableau_of_permutation(hat_word(w.n, k)) == tab
    return k
