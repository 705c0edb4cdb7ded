"""
Row insertion for permutations and integral weights.

Insertion bumps the leftmost entry that is *strictly* bigger than the incoming
value, so equal entries sit side by side in a row.

>>> tableau_of_weight((1, 4, 9, 0))
YoungTableau(rows=((0, 4, 9), (1,)))
>>> rank_word((1, 4, 9, 1, 0))
Permutation(one_line=(2, 4, 5, 3, 1))
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .coxcore import Permutation, Weight, as_weight, inverse

__all__ = [
    "YoungTableau", "Partition", "insert_sequence", "tableau_of_weight",
    "tableau_of_permutation", "recording_tableau", "rank_word",
    "weight_to_permutation", "is_integral", "dual_partition",
    "standard_tableaux", "NonIntegralWeight", "integral_offsets",
]

Partition = tuple[int, ...]


class NonIntegralWeight(ValueError):
    pass


def _fmt(x) -> str:
    return str(Fraction(x)) if isinstance(x, Fraction) else str(x)


@dataclass(frozen=True)
class YoungTableau:
    """Rows top first. Entries are ints or exact rationals."""
    rows: tuple[tuple, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def column_lengths(self) -> Partition:
        return dual_partition(self.shape())

    def columns(self) -> list[tuple]:
        cols = []
        for j, c in enumerate(self.column_lengths()):
            cols.append(tuple(self.rows[i][j] for i in range(c)))
        return cols

    def a_value(self) -> int:
        return sum(c * (c - 1) // 2 for c in self.column_lengths())

    def is_valid(self) -> bool:
        """Rows weakly increasing, columns strictly increasing, valid shape."""
        shape = self.shape()
        if any(a < b for a, b in zip(shape, shape[1:])) or 0 in shape:
            return False
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def is_standard(self) -> bool:
        entries = sorted(x for r in self.rows for x in r)
        return entries == list(range(1, self.size + 1)) and self.is_valid()

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(_fmt(x) for x in r) + "]" for r in self.rows) + "]"

    @classmethod
    def parse(cls, text: str) -> YoungTableau:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"not a tableau: {text!r}")
        body = body[1:-1].strip()
        rows = []
        while body:
            if not body.startswith("["):
                raise ValueError(f"not a tableau: {text!r}")
            end = body.index("]")
            inner = body[1:end].strip()
            rows.append(tuple(_parse_entry(x) for x in inner.split(",")) if inner else ())
            body = body[end + 1:].lstrip(", ")
        return cls(tuple(rows))


def _parse_entry(text: str):
    x = Fraction(text.strip())
    return int(x) if x.denominator == 1 else x


def dual_partition(shape: Sequence[int]) -> Partition:
    """Conjugate partition: column lengths of the diagram with row lengths ``shape``."""
    if not shape:
        return ()
    return tuple(sum(1 for r in shape if r > j) for j in range(max(shape)))


def insert_sequence(seq: Iterable) -> tuple[YoungTableau, YoungTableau]:
    """Insert ``seq`` left to right; return (insertion, recording) tableaux.

    Box ``k`` of the recording tableau marks where insertion step ``k``
    created a new box.
    """
    rows: list[list] = []
    rec: list[list[int]] = []
    for step, x in enumerate(seq, start=1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                rec.append([step])
                break
            row = rows[r]
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                rec[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return YoungTableau(tuple(map(tuple, rows))), YoungTableau(tuple(map(tuple, rec)))


def is_integral(t: Sequence) -> bool:
    t = as_weight(t)
    return all((x - t[0]).denominator == 1 for x in t)


def _check_integral(t: Sequence) -> Weight:
    w = as_weight(t)
    if not is_integral(w):
        raise NonIntegralWeight(f"weight has non-integral differences: {tuple(map(str, w))}")
    return w


def integral_offsets(t: Sequence) -> tuple[int, ...]:
    """``(t_i - t_1)`` as plain ints; raises on a non-integral weight.

    Everything that only depends on the order pattern and integrality of the
    coordinates can run on these instead of on rationals.
    """
    if not t:
        return ()
    if all(type(x) is int for x in t):
        return tuple(x - t[0] for x in t)
    w = as_weight(t)
    # integral differences force one common denominator
    d, base = w[0].denominator, w[0].numerator
    if any(x.denominator != d or (x.numerator - base) % d for x in w):
        raise NonIntegralWeight(f"weight has non-integral differences: {tuple(map(str, w))}")
    return tuple((x.numerator - base) // d for x in w)


def tableau_of_weight(t: Sequence) -> YoungTableau:
    """Insertion tableau of the coordinates of an integral ``lambda + rho``."""
    w = _check_integral(t)
    # keep integer entries as ints for readable output
    coords = [int(x) if x.denominator == 1 else x for x in w]
    return insert_sequence(coords)[0]


def tableau_of_permutation(w: Permutation) -> YoungTableau:
    return insert_sequence(w.one_line)[0]


def recording_tableau(w: Permutation) -> YoungTableau:
    return insert_sequence(w.one_line)[1]


def rank_word(t: Sequence) -> Permutation:
    """Rank of each coordinate; equal values get increasing ranks left to right."""
    w = integral_offsets(t)
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    ranks = [0] * len(w)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return Permutation(tuple(ranks))


def weight_to_permutation(t: Sequence) -> Permutation:
    """The Weyl group element ``w_lambda``: inverse of the rank word."""
    return inverse(rank_word(t))


def standard_tableaux(shape: Sequence[int]) -> list[YoungTableau]:
    """All standard tableaux of ``shape``, by placing ``n, n-1, ...`` in corners."""
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return [YoungTableau(())]
    out = []
    for i, r in enumerate(shape):
        if r > (shape[i + 1] if i + 1 < len(shape) else 0):
            smaller = list(shape)
            smaller[i] -= 1
            smaller = tuple(x for x in smaller if x)
            for t in standard_tableaux(smaller):
                rows = [list(row) for row in t.rows]
                if i == len(rows):
                    rows.append([])
                rows[i].append(n)
                out.append(YoungTableau(tuple(map(tuple, rows))))
    return out
