"""
Gelfand-Kirillov dimension of integral highest weight modules of sl(n), and
the tests for its minimal value ``n - 1``.

Weights are given as ``lambda + rho = (t_1, ..., t_n)``. Positions are 1-based
in everything returned from this module.

>>> gkdim_weight((1, 4, 9, 0)).gkdim
5
>>> corollary_pq_witness((5, 4, 2, 1, 3))
MinimalityWitness(p=4, i1=3, route='pq-dominance')
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coxcore import Permutation, Weight, act_on_weight, rho
from .tableaux import _check_integral, insert_sequence, integral_offsets, tableau_of_permutation

__all__ = [
    "GKReport", "MinimalityWitness", "gkdim_weight", "gkdim_of_w",
    "gkdim_from_columns", "is_minimal_gkdim", "is_ordered",
    "pq_dominant_indices", "corollary_pq_witness", "corollary_pq_witnesses",
    "ordered_after_removal", "highest_weight_of_w",
]


def gkdim_from_columns(columns: Sequence[int]) -> int:
    n = sum(columns)
    return (n * n - sum(c * c for c in columns)) // 2


@dataclass(frozen=True)
class GKReport:
    weight: Weight
    columns: tuple[int, ...]
    a_value: int
    gkdim: int

    def as_record(self) -> dict:
        return {
            "weight": [str(x) for x in self.weight],
            "columns": list(self.columns),
            "a": self.a_value,
            "gkdim": self.gkdim,
        }


@dataclass(frozen=True)
class MinimalityWitness:
    p: int
    i1: int | None = None
    route: str = "pq-dominance"


def gkdim_weight(t: Sequence) -> GKReport:
    w = _check_integral(t)
    n = len(w)
    tab = insert_sequence(integral_offsets(w))[0]
    cols = tab.column_lengths()
    a = tab.a_value()
    gk = n * (n - 1) // 2 - a
    if gk != gkdim_from_columns(cols):
        raise ArithmeticError(f"GK formulas disagree on {w}: {gk} vs {gkdim_from_columns(cols)}")
    return GKReport(w, cols, a, gk)


def highest_weight_of_w(w: Permutation) -> Weight:
    """``lambda + rho = -w rho`` for the simple module ``L_w``."""
    return tuple(-x for x in act_on_weight(w, rho(w.n)))


def gkdim_of_w(w: Permutation) -> int:
    return gkdim_from_columns(tableau_of_permutation(w).column_lengths())


def is_minimal_gkdim(t: Sequence) -> bool:
    """Columns of the weight tableau are exactly ``(n-1, 1)``."""
    w = integral_offsets(t)
    if len(w) < 2:
        raise ValueError("minimality needs n >= 2")
    return insert_sequence(w)[0].column_lengths() == (len(w) - 1, 1)


def _strictly_decreasing(seg: Sequence[int]) -> bool:
    # callers pass integer offsets, so differences are integers already
    return all(a > b for a, b in zip(seg, seg[1:]))


def is_ordered(t: Sequence) -> bool:
    """All consecutive differences are positive integers."""
    diffs = [Fraction(a) - Fraction(b) for a, b in zip(t, t[1:])]
    return all(d > 0 and d.denominator == 1 for d in diffs)


def pq_dominant_indices(t: Sequence) -> list[int]:
    w = integral_offsets(t)
    return [p for p in range(1, len(w)) if _strictly_decreasing(w[:p]) and _strictly_decreasing(w[p:])]


def _i1(w: Sequence[int], p: int) -> int | None:
    n = len(w)
    for i1 in range(1, p + 1):
        if w[i1 - 1] <= w[p]:
            break
    else:
        return None
    # t_{p+2} beyond the end counts as satisfied
    if i1 != p and p + 2 <= n and not w[p - 1] > w[p + 1]:
        return None
    return i1


def corollary_pq_witnesses(t: Sequence) -> list[MinimalityWitness]:
    w = integral_offsets(t)
    out = []
    for p in pq_dominant_indices(w):
        i1 = _i1(w, p)
        if i1 is not None:
            out.append(MinimalityWitness(p, i1))
    return out


def corollary_pq_witness(t: Sequence) -> MinimalityWitness | None:
    """Smallest ``p`` with a (p, n-p)-dominant split and a valid ``i1``."""
    found = corollary_pq_witnesses(t)
    return found[0] if found else None


def ordered_after_removal(t: Sequence) -> frozenset[int] | None:
    """Positions whose removal leaves an ordered weight.

    ``None`` when ``t`` is already ordered or no removal works.
    """
    w = integral_offsets(t)
    if _strictly_decreasing(w):
        return None
    found = frozenset(
        i for i in range(1, len(w) + 1) if _strictly_decreasing(w[: i - 1] + w[i:])
    )
    return found or None
