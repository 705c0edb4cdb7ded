"""
Kazhdan-Lusztig polynomials, mu-coefficients and cells of a finite Coxeter group.

Elements are indexed by their position in ``model.elements()`` (sorted by
length, identity first). For ``x <= w`` and a left descent ``s`` of ``w``
with ``v = s w``,

    P[x,w] = q^(1-c) P[sx,v] + q^c P[x,v]
             - sum_{z < v, sz < z} mu(z,v) q^((l(w)-l(z))/2) P[x,z]

where ``c = 1`` if ``sx < x`` and ``0`` otherwise, and ``P[a,b] = 0`` when
``a`` is not below ``b``.

>>> from avcells.coxcore import SymmetricGroup, Permutation
>>> table = kl_table(SymmetricGroup(4))
>>> poly_str(table.polynomial(Permutation((1, 3, 2, 4)), Permutation((3, 4, 1, 2))))
'1+q'
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from os import PathLike
from typing import Hashable, Literal

import networkx as nx

from .coxcore import CoxeterModel

__all__ = [
    "Poly", "KLTable", "CellPartition", "NotBruhatComparable", "CacheError",
    "kl_table", "kl_polynomial", "mu", "cells", "right_equivalent",
    "left_equivalent", "two_sided_equivalent", "poly_str",
]

log = logging.getLogger(__name__)

# integer coefficients, constant term first, no trailing zeros
Poly = tuple[int, ...]
Side = Literal["left", "right", "two-sided"]

CACHE_MAGIC = "KLCACHE"
CACHE_VERSION = 1


class NotBruhatComparable(ValueError):
    pass


class CacheError(ValueError):
    pass


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _axpy(acc: list[int], coeff: int, shift: int, p: Poly) -> None:
    """acc += coeff * q^shift * p, in place."""
    need = shift + len(p)
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, a in enumerate(p):
        acc[shift + i] += coeff * a


def poly_str(p: Poly) -> str:
    """Render as ``1+q``, ``1+2q+q^3`` and so on."""
    terms = []
    for d, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        if d == 0:
            body = str(abs(c))
        else:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(sign + body for sign, body in terms[1:])


class KLTable:
    """Full table of ``P[x,w]`` for a finite model, built eagerly.

    Read-only once constructed; share freely between threads.
    """

    def __init__(self, model: CoxeterModel, cache: str | PathLike | None = None):
        self.model = model
        self.elements = model.elements()
        self.index = {w: i for i, w in enumerate(self.elements)}
        gens = list(model.generators())
        self.generators = gens
        idx = self.index
        self.lengths = [model.length(w) for w in self.elements]
        # left[i][s], right[i][s]: index of s*w_i and w_i*s
        self.left = [{s: idx[model.left(s, w)] for s in gens} for w in self.elements]
        self.right = [{s: idx[model.right(w, s)] for s in gens} for w in self.elements]
        self.inverse = [idx[model.inverse(w)] for w in self.elements]
        lens = self.lengths
        self.left_descents = [
            frozenset(s for s in gens if lens[self.left[i][s]] < lens[i]) for i in range(len(lens))
        ]
        self.right_descents = [
            frozenset(s for s in gens if lens[self.right[i][s]] < lens[i]) for i in range(len(lens))
        ]
        self.ideals = self._bruhat_ideals()
        self._p: dict[tuple[int, int], Poly] = {}
        if cache is not None:
            self._load(cache)
        else:
            self._build()
        self.mu_below = self._mu_lists()
        self._cells: dict[str, CellPartition] = {}

    # -- Bruhat order --------------------------------------------------

    def _bruhat_ideals(self) -> list[frozenset[int]]:
        # for s in L(w), u <= w iff (su < u and su <= sw) or (su > u and u <= sw);
        # equivalently ideal(w) = ideal(sw) | s.ideal(sw)
        ideals: list[frozenset[int]] = [frozenset()] * len(self.elements)
        for w in range(len(self.elements)):
            if self.lengths[w] == 0:
                ideals[w] = frozenset({w})
                continue
            s = min(self.left_descents[w])
            below = ideals[self.left[w][s]]
            ideals[w] = below | {self.left[u][s] for u in below}
        return ideals

    def leq(self, u: int, w: int) -> bool:
        return u in self.ideals[w]

    # -- polynomials ---------------------------------------------------

    def _get(self, x: int, w: int) -> Poly:
        return self._p.get((x, w), ())

    def _build(self) -> None:
        p = self._p
        lens = self.lengths
        mu_cache: dict[int, list[tuple[int, int]]] = {}
        for w in range(len(self.elements)):
            if lens[w] == 0:
                p[w, w] = (1,)
                continue
            s = min(self.left_descents[w])
            v = self.left[w][s]
            mu_terms = [
                (z, m) for z, m in self._mu_of(v, mu_cache) if s in self.left_descents[z]
            ]
            for x in sorted(self.ideals[w], key=lambda i: lens[i]):
                sx = self.left[x][s]
                c = 1 if lens[sx] < lens[x] else 0
                acc: list[int] = []
                _axpy(acc, 1, 1 - c, self._get(sx, v))
                _axpy(acc, 1, c, self._get(x, v))
                for z, m in mu_terms:
                    pxz = self._get(x, z)
                    if pxz:
                        _axpy(acc, -m, (lens[w] - lens[z]) // 2, pxz)
                p[x, w] = _trim(acc)
        log.debug("built KL table for %s: %d pairs", self.model.model_id, len(p))

    def _mu_of(self, v: int, memo: dict[int, list[tuple[int, int]]]) -> list[tuple[int, int]]:
        if v not in memo:
            memo[v] = [
                (z, m) for z in self.ideals[v] if z != v
                for m in [self._mu_idx(z, v)] if m
            ]
        return memo[v]

    def _mu_idx(self, x: int, w: int) -> int:
        d = self.lengths[w] - self.lengths[x]
        if d <= 0 or d % 2 == 0 or x not in self.ideals[w]:
            return 0
        poly = self._p[x, w]
        top = (d - 1) // 2
        return poly[top] if top < len(poly) else 0

    def _mu_lists(self) -> list[list[tuple[int, int]]]:
        memo: dict[int, list[tuple[int, int]]] = {}
        return [self._mu_of(v, memo) for v in range(len(self.elements))]

    def polynomial(self, x: Hashable, w: Hashable) -> Poly:
        i, j = self.index[x], self.index[w]
        if i not in self.ideals[j]:
            raise NotBruhatComparable(
                f"{self.model.format(x)} is not below {self.model.format(w)} in Bruhat order"
            )
        return self._p[i, j]

    def mu(self, x: Hashable, w: Hashable) -> int:
        """Symmetrised mu: the top coefficient for whichever of the pair is lower."""
        i, j = self.index[x], self.index[w]
        if self.lengths[i] > self.lengths[j]:
            i, j = j, i
        return self._mu_idx(i, j)

    def mu_edges(self) -> list[tuple[int, int, int]]:
        """All ``(z, v, mu)`` with ``z < v`` and nonzero mu, as indices."""
        return [(z, v, m) for v, lst in enumerate(self.mu_below) for z, m in lst]

    # -- cache ---------------------------------------------------------

    def save(self, path: str | PathLike) -> None:
        fmt = self.model.format
        with open(path, "w") as fh:
            fh.write(f"{CACHE_MAGIC} {CACHE_VERSION} {self.model.model_id}\n")
            for (x, w), poly in sorted(self._p.items()):
                coeffs = ",".join(map(str, poly))
                fh.write(f"{fmt(self.elements[x])};{fmt(self.elements[w])};{coeffs}\n")

    def _load(self, path: str | PathLike) -> None:
        with open(path) as fh:
            header = fh.readline().split()
            if header[:2] != [CACHE_MAGIC, str(CACHE_VERSION)] or len(header) != 3:
                raise CacheError(f"{path}: bad cache header {' '.join(header)!r}")
            if header[2] != self.model.model_id:
                raise CacheError(f"{path}: cache is for {header[2]}, not {self.model.model_id}")
            for lineno, line in enumerate(fh, start=2):
                line = line.strip()
                if not line:
                    continue
                try:
                    xs, ws, cs = line.split(";")
                    x = self.index[self.model.parse(xs)]
                    w = self.index[self.model.parse(ws)]
                    poly = tuple(int(c) for c in cs.split(",")) if cs else ()
                except (ValueError, KeyError) as exc:
                    raise CacheError(f"{path}:{lineno}: bad record {line!r}") from exc
                self._p[x, w] = poly
        expected = sum(len(ideal) for ideal in self.ideals)
        if len(self._p) != expected:
            raise CacheError(f"{path}: {len(self._p)} records, expected {expected}")

    # -- cells ---------------------------------------------------------

    def cell_graph(self, side: Side) -> nx.DiGraph:
        """Edge ``w -> y`` whenever ``y`` is one generating step below ``w``."""
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.elements)))
        for z, v, _ in self.mu_edges():
            for a, b in ((z, v), (v, z)):
                # a <=_L b if L(a) is not contained in L(b); likewise on the right
                if side in ("left", "two-sided") and not self.left_descents[a] <= self.left_descents[b]:
                    g.add_edge(b, a)
                if side in ("right", "two-sided") and not self.right_descents[a] <= self.right_descents[b]:
                    g.add_edge(b, a)
        return g

    def cells(self, side: Side) -> CellPartition:
        if side not in ("left", "right", "two-sided"):
            raise ValueError(f"unknown side {side!r}")
        if side in self._cells:
            return self._cells[side]
        g = self.cell_graph(side)
        cell_of: dict[int, int] = {}
        for comp in nx.strongly_connected_components(g):
            rep = min(comp)
            for i in comp:
                cell_of[i] = rep
        order = frozenset(
            (cell_of[b], cell_of[a]) for a, b in g.edges if cell_of[a] != cell_of[b]
        )
        self._cells[side] = CellPartition(side, self, cell_of, order)
        return self._cells[side]


@dataclass(frozen=True)
class CellPartition:
    """Cells of one side, ids being the first member in enumeration order.

    ``order`` holds generating pairs ``(lower, upper)`` of the cell preorder.
    """
    side: str
    table: KLTable
    cell_of_index: dict[int, int]
    order: frozenset[tuple[int, int]]

    def cell_id(self, w: Hashable) -> int:
        return self.cell_of_index[self.table.index[w]]

    def blocks(self) -> list[list]:
        by_id: dict[int, list] = {}
        for i in sorted(self.cell_of_index):
            by_id.setdefault(self.cell_of_index[i], []).append(self.table.elements[i])
        return [by_id[k] for k in sorted(by_id)]

    def as_sets(self) -> set[frozenset]:
        return {frozenset(b) for b in self.blocks()}

    def __len__(self) -> int:
        return len(set(self.cell_of_index.values()))

    def cell_leq(self, a: int, b: int) -> bool:
        """Whether cell ``a`` lies below cell ``b`` in the preorder."""
        if a == b:
            return True
        g = nx.DiGraph()
        g.add_nodes_from(set(self.cell_of_index.values()))
        g.add_edges_from((hi, lo) for lo, hi in self.order)
        return nx.has_path(g, b, a)


@lru_cache(maxsize=8)
def kl_table(model: CoxeterModel) -> KLTable:
    return KLTable(model)


def kl_polynomial(table: KLTable, x, w) -> Poly:
    return table.polynomial(x, w)


def mu(table: KLTable, x, w) -> int:
    return table.mu(x, w)


def cells(model: CoxeterModel, side: Side) -> CellPartition:
    return kl_table(model).cells(side)


def right_equivalent(model: CoxeterModel, w, y) -> bool:
    part = cells(model, "right")
    return part.cell_id(w) == part.cell_id(y)


def left_equivalent(model: CoxeterModel, w, y) -> bool:
    part = cells(model, "left")
    return part.cell_id(w) == part.cell_id(y)


def two_sided_equivalent(model: CoxeterModel, w, y) -> bool:
    part = cells(model, "two-sided")
    return part.cell_id(w) == part.cell_id(y)
