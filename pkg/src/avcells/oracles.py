"""
Slow, independent recomputations used to cross-check the fast paths.

Nothing here touches ``klengine`` or the Bruhat recursion in ``coxcore``:
permutations are bare one-line tuples and everything is rebuilt from the
definitions.

* Bruhat order by the subword property of one reduced word.
* KL polynomials from R-polynomials: for ``x <= w`` with ``d = l(w) - l(x)``,
  ``q^d P[x,w](1/q) - P[x,w](q) = sum_{x < y <= w} R[x,y] P[y,w]``, and the two
  terms on the left live in disjoint degree ranges.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

__all__ = [
    "inversions", "reduced_word", "bruhat_leq_subword", "r_polynomial",
    "kl_polynomial_from_r", "count_involutions", "count_partitions",
]


def inversions(w: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _swap_positions(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    line = list(w)
    line[i - 1], line[i] = line[i], line[i - 1]
    return tuple(line)


def _swap_values(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def reduced_word(w: tuple[int, ...]) -> list[int]:
    """A reduced word ``[i1, ..., il]`` with ``w = s_i1 ... s_il``, by bubble sort."""
    word = []
    line = list(w)
    while True:
        for i in range(len(line) - 1):
            if line[i] > line[i + 1]:
                line[i], line[i + 1] = line[i + 1], line[i]
                word.append(i + 1)
                break
        else:
            break
    return word[::-1]


def bruhat_leq_subword(u: tuple[int, ...], w: tuple[int, ...]) -> bool:
    word = reduced_word(w)
    n = len(w)
    for mask in range(1 << len(word)):
        x = tuple(range(1, n + 1))
        for bit, s in enumerate(word):
            if mask >> bit & 1:
                x = _swap_positions(x, s)
        if x == u:
            return True
    return False


@lru_cache(maxsize=None)
def r_polynomial(x: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    """R[x,w] with ``R[x,e] = [x == e]`` and, for a left descent ``s`` of ``w``,
    ``R[x,w] = R[sx,sw]`` if ``sx < x`` else ``(q-1) R[x,sw] + q R[sx,sw]``.
    """
    n = len(w)
    if inversions(w) == 0:
        return (1,) if x == w else ()
    s = next(i for i in range(1, n) if w.index(i + 1) < w.index(i))
    sw, sx = _swap_values(w, s), _swap_values(x, s)
    if inversions(sx) < inversions(x):
        return r_polynomial(sx, sw)
    a, b = r_polynomial(x, sw), r_polynomial(sx, sw)
    out = [0] * (max(len(a), len(b)) + 1)
    for i, c in enumerate(a):
        out[i + 1] += c
        out[i] -= c
    for i, c in enumerate(b):
        out[i + 1] += c
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def kl_polynomial_from_r(x: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    if x == w:
        return (1,)
    if not r_polynomial(x, w):
        return ()
    d = inversions(w) - inversions(x)
    rhs = [0] * (d + 1)
    n = len(w)
    for y in permutations(range(1, n + 1)):
        if y == x or not inversions(x) < inversions(y) <= inversions(w):
            continue
        r = r_polynomial(x, y)
        if not r:
            continue
        p = kl_polynomial_from_r(y, w)
        for i, a in enumerate(r):
            for j, b in enumerate(p):
                rhs[i + j] += a * b
    low = [-c for c in rhs[: (d - 1) // 2 + 1]]
    while low and low[-1] == 0:
        low.pop()
    return tuple(low)


def count_involutions(n: int) -> int:
    a, b = 1, 1  # I(0), I(1)
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n >= 1 else a


def count_partitions(n: int) -> int:
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]
