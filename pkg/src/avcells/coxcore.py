"""
Coxeter group elements for type A (permutations) and dihedral groups.

Permutations use one-line notation on ``1..n``: ``w.one_line[i-1] == w(i)``.
Simple reflections are indexed from 1, ``s_i`` swapping ``i`` and ``i+1``.
Multiplying by ``s_i`` on the right swaps positions ``i, i+1`` of the one-line
word; on the left it swaps the values ``i, i+1``.

>>> w = Permutation((2, 3, 4, 1))
>>> length(w), descent_sets(w)
(3, (frozenset({1}), frozenset({3})))
>>> hat_word(5, 3)
Permutation(one_line=(5, 4, 2, 1, 3))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Hashable, Iterable, Protocol, Sequence

__all__ = [
    "Permutation", "DihedralElement", "CoxeterModel", "SymmetricGroup",
    "DihedralGroup", "ParabolicSubset", "Weight",
    "compose", "inverse", "length", "descent_sets", "bruhat_leq",
    "longest_element", "parabolic_longest", "hat_word", "rho",
    "act_on_weight", "as_weight", "parse_permutation", "parse_weight",
    "format_weight",
]

# lambda + rho as an exact rational vector
Weight = tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        line = tuple(int(x) for x in self.one_line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise ValueError(f"not a permutation of 1..{len(line)}: {self.one_line}")
        object.__setattr__(self, "one_line", line)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> Permutation:
        """The simple reflection ``s_i`` of ``S_n``."""
        if not 1 <= i < n:
            raise ValueError(f"generator index {i} out of range for S_{n}")
        line = list(range(1, n + 1))
        line[i - 1], line[i] = line[i], line[i - 1]
        return cls(tuple(line))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.one_line))

    def mul_right(self, i: int) -> Permutation:
        line = list(self.one_line)
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    def mul_left(self, i: int) -> Permutation:
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.one_line))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """``(u o w)(i) = u(w(i))``.

    >>> str(compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))))
    '2,3,1'
    """
    if u.n != w.n:
        raise ValueError(f"rank mismatch: {u.n} != {w.n}")
    return Permutation(tuple(u.one_line[x - 1] for x in w.one_line))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, x in enumerate(w.one_line, start=1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions."""
    line = w.one_line
    return sum(1 for i in range(len(line)) for j in range(i + 1, len(line)) if line[i] > line[j])


def descent_sets(w: Permutation) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(left, right)`` descent sets of ``w``.

    The right set is ``{i : w(i) > w(i+1)}``; the left set is the right set
    of the inverse.
    """
    right = frozenset(i for i in range(1, w.n) if w(i) > w(i + 1))
    pos = inverse(w).one_line
    left = frozenset(i for i in range(1, w.n) if pos[i - 1] > pos[i])
    return left, right


@lru_cache(maxsize=None)
def _bruhat_leq_perm(u: tuple[int, ...], w: tuple[int, ...]) -> bool:
    if u == w:
        return True
    n = len(w)
    pos_w = [0] * n
    for i, x in enumerate(w):
        pos_w[x - 1] = i
    # a left descent s of w: value i+1 occurs before value i
    for s in range(1, n):
        if pos_w[s] < pos_w[s - 1]:
            break
    else:
        return False  # w is the identity and u != w
    swap = {s: s + 1, s + 1: s}
    sw = tuple(swap.get(x, x) for x in w)
    su = tuple(swap.get(x, x) for x in u)
    if u.index(s + 1) < u.index(s):
        return _bruhat_leq_perm(su, sw)
    return _bruhat_leq_perm(u, sw)


def bruhat_leq(u, w, model: CoxeterModel | None = None) -> bool:
    """Bruhat order test by the recursive left-descent rule.

    Permutations are handled directly; any other element needs its ``model``.
    """
    if isinstance(u, Permutation) and isinstance(w, Permutation):
        if u.n != w.n:
            raise ValueError(f"rank mismatch: {u.n} != {w.n}")
        return _bruhat_leq_perm(u.one_line, w.one_line)
    if model is None:
        raise TypeError("non-permutation elements need an explicit model")
    return model_bruhat_leq(model, u, w)


def model_bruhat_leq(model: CoxeterModel, u, w) -> bool:
    while True:
        if u == w:
            return True
        lw = model.length(w)
        if model.length(u) >= lw:
            return False
        s = next(s for s in model.generators() if model.length(model.left(s, w)) < lw)
        w = model.left(s, w)
        su = model.left(s, u)
        if model.length(su) < model.length(u):
            u = su


# -- group models ----------------------------------------------------------

class CoxeterModel(Protocol):
    """What the KL engine needs from a finite Coxeter group."""

    model_id: str
    rank: int

    def generators(self) -> range: ...
    def elements(self) -> list: ...
    def identity(self) -> Hashable: ...
    def length(self, w) -> int: ...
    def left(self, s: int, w): ...
    def right(self, w, s: int): ...
    def inverse(self, w): ...
    def format(self, w) -> str: ...
    def parse(self, text: str): ...


@dataclass(frozen=True)
class SymmetricGroup:
    n: int

    @property
    def model_id(self) -> str:
        return f"S{self.n}"

    @property
    def rank(self) -> int:
        return self.n - 1

    def generators(self) -> range:
        return range(1, self.n)

    def elements(self) -> list[Permutation]:
        """All of ``S_n``, sorted by length then one-line word."""
        perms = [Permutation(p) for p in permutations(range(1, self.n + 1))]
        return sorted(perms, key=lambda p: (length(p), p.one_line))

    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def length(self, w: Permutation) -> int:
        return length(w)

    def left(self, s: int, w: Permutation) -> Permutation:
        return w.mul_left(s)

    def right(self, w: Permutation, s: int) -> Permutation:
        return w.mul_right(s)

    def inverse(self, w: Permutation) -> Permutation:
        return inverse(w)

    def format(self, w: Permutation) -> str:
        return str(w)

    def parse(self, text: str) -> Permutation:
        w = parse_permutation(text)
        if w.n != self.n:
            raise ValueError(f"expected a permutation of 1..{self.n}, got {text!r}")
        return w


@dataclass(frozen=True, order=True)
class DihedralElement:
    """Element of ``I_2(m)`` as an alternating word.

    ``k`` is the length and ``start`` (1 or 2) the first generator. The
    identity and the longest element are stored with ``start == 1``.
    """
    m: int
    k: int
    start: int = 1

    def __post_init__(self):
        if not 0 <= self.k <= self.m:
            raise ValueError(f"length {self.k} out of range for I2({self.m})")
        if self.start not in (1, 2):
            raise ValueError(f"start generator must be 1 or 2, got {self.start}")
        if self.k in (0, self.m):
            object.__setattr__(self, "start", 1)

    @property
    def last(self) -> int:
        return self.start if self.k % 2 == 1 else 3 - self.start

    def __str__(self) -> str:
        return f"{self.k}:{self.start}"


@dataclass(frozen=True)
class DihedralGroup:
    m: int
    rank: int = field(default=2, init=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"I2(m) needs m >= 2, got {self.m}")

    @property
    def model_id(self) -> str:
        return f"I2({self.m})"

    def generators(self) -> range:
        return range(1, 3)

    def elements(self) -> list[DihedralElement]:
        out = [DihedralElement(self.m, 0)]
        for k in range(1, self.m):
            out += [DihedralElement(self.m, k, 1), DihedralElement(self.m, k, 2)]
        out.append(DihedralElement(self.m, self.m))
        return out

    def identity(self) -> DihedralElement:
        return DihedralElement(self.m, 0)

    def length(self, w: DihedralElement) -> int:
        return w.k

    def left(self, s: int, w: DihedralElement) -> DihedralElement:
        m, k = self.m, w.k
        if k == m:
            return DihedralElement(m, m - 1, 3 - s)
        if k > 0 and w.start == s:
            return DihedralElement(m, k - 1, 3 - s)
        return DihedralElement(m, k + 1, s)

    def right(self, w: DihedralElement, s: int) -> DihedralElement:
        m, k = self.m, w.k
        if k == m:
            # the remaining word of length m-1 ends with the other generator
            end = 3 - s
            return DihedralElement(m, m - 1, end if (m - 1) % 2 == 1 else 3 - end)
        if k == 0:
            return DihedralElement(m, 1, s)
        if w.last == s:
            return DihedralElement(m, k - 1, w.start)
        return DihedralElement(m, k + 1, w.start)

    def inverse(self, w: DihedralElement) -> DihedralElement:
        return DihedralElement(self.m, w.k, w.last)

    def format(self, w: DihedralElement) -> str:
        return str(w)

    def parse(self, text: str) -> DihedralElement:
        k, _, start = text.strip().partition(":")
        return DihedralElement(self.m, int(k), int(start or 1))


def longest_element(model: CoxeterModel):
    """The unique element of maximal length."""
    elems = model.elements()
    top = max(model.length(w) for w in elems)
    (w0,) = [w for w in elems if model.length(w) == top]
    return w0


# -- parabolic data --------------------------------------------------------

@dataclass(frozen=True)
class ParabolicSubset:
    """A subset ``I`` of the simple-root indices ``1..n-1`` of ``sl(n)``."""
    n: int
    indices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(int(i) for i in self.indices))
        bad = [i for i in self.indices if not 1 <= i < self.n]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside 1..{self.n - 1}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[int]) -> ParabolicSubset:
        """Inverse of ``blocks``: a composition of ``n`` gives its subset."""
        if any(b <= 0 for b in blocks):
            raise ValueError(f"blocks must be positive: {tuple(blocks)}")
        indices, start = set(), 1
        for b in blocks:
            indices.update(range(start, start + b - 1))
            start += b
        return cls(sum(blocks), frozenset(indices))

    @property
    def blocks(self) -> tuple[int, ...]:
        out, size = [], 1
        for i in range(1, self.n):
            if i in self.indices:
                size += 1
            else:
                out.append(size)
                size = 1
        out.append(size)
        return tuple(out)

    def block_ranges(self) -> list[range]:
        """Position ranges (1-based) of the Levi blocks."""
        out, start = [], 1
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def __str__(self) -> str:
        return ",".join(map(str, sorted(self.indices)))

    @classmethod
    def parse(cls, text: str, n: int) -> ParabolicSubset:
        text = text.strip()
        return cls(n, frozenset(int(x) for x in text.split(",")) if text else frozenset())


def parabolic_longest(subset: ParabolicSubset) -> Permutation:
    """The longest element ``w_I`` of ``W_I``: every Levi block reversed."""
    line: list[int] = []
    for block in subset.block_ranges():
        line.extend(reversed(block))
    return Permutation(tuple(line))


def hat_word(n: int, k: int) -> Permutation:
    """``(n, n-1, ..., k+1, k-1, ..., 1, k)``: descending order with ``k`` moved last."""
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got n={n}, k={k}")
    return Permutation(tuple(x for x in range(n, 0, -1) if x != k) + (k,))


# -- weights ---------------------------------------------------------------

def as_weight(coords: Iterable) -> Weight:
    return tuple(c if type(c) is Fraction else Fraction(c) for c in coords)


def rho(n: int) -> Weight:
    """Half sum of positive roots of ``sl(n)`` in the ``e_i`` coordinates."""
    if n < 2:
        raise ValueError(f"rho needs n >= 2, got {n}")
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def act_on_weight(w: Permutation, t: Sequence) -> Weight:
    """``(w.t)_i = t_{w^{-1}(i)}``, i.e. coordinate ``i`` moves to slot ``w(i)``."""
    if w.n != len(t):
        raise ValueError(f"rank mismatch: {w.n} != {len(t)}")
    out: list[Fraction] = [Fraction(0)] * w.n
    for i, x in enumerate(w.one_line):
        out[x - 1] = Fraction(t[i])
    return tuple(out)


def parse_permutation(text: str) -> Permutation:
    return Permutation(tuple(int(x) for x in text.split(",")))


def parse_weight(text: str) -> Weight:
    return tuple(Fraction(x.strip()) for x in text.split(","))


def format_weight(t: Sequence) -> str:
    return ",".join(str(Fraction(x)) for x in t)
