"""
Desk-scale verification suites.

Each suite returns a ``VerifyReport``; ``failures`` holds one line per
counterexample and is empty exactly when the suite passed. Runs are
deterministic: elements are visited in model enumeration order and sampled
suites draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import oracles
from .coxcore import (
    DihedralGroup, ParabolicSubset, Permutation, SymmetricGroup, format_weight,
    hat_word, inverse,
)
from .klengine import KLTable, kl_table
from .modinv import (
    corollary_pq_witness, corollary_pq_witnesses, gkdim_of_w, gkdim_weight,
    highest_weight_of_w, is_minimal_gkdim, ordered_after_removal,
)
from .tableaux import (
    rank_word, standard_tableaux, tableau_of_permutation, tableau_of_weight,
    weight_to_permutation,
)
from .varieties import (
    Nilradical, SimpleRootClosure, TableauLabel, annihilators_equal, label_dim,
    max_gkdim_variety, minimal_variety_of_weight, orbit_dim,
    orbital_variety_label, richardson_data, steinberg_orbit,
)

__all__ = ["VerifyReport", "SUITES", "LIMITS", "resolve_ns", "run"]

# largest n each suite accepts; (default, with --big)
LIMITS = {
    "engine": (5, 6),
    "thm1": (5, 6),
    "thm2": (7, 7),
    "thm3": (8, 8),
    "corollaries": (8, 8),
}
SMALLEST = {"engine": 3, "thm1": 3, "thm2": 2, "thm3": 2, "corollaries": 2}

MAX_LISTED_FAILURES = 50


@dataclass
class VerifyReport:
    target: str
    params: dict
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: str | Callable[[], str]) -> None:
        if not cond:
            self.failures.append(message() if callable(message) else message)

    def as_record(self, timing: bool = False) -> dict:
        rec = {
            "target": self.target,
            "params": self.params,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
            "ok": self.ok,
        }
        if timing:
            rec["elapsed"] = round(self.elapsed, 3)
        return rec


def _fibers(elements, key) -> set[frozenset]:
    groups = defaultdict(set)
    for w in elements:
        groups[key(w)].add(w)
    return {frozenset(g) for g in groups.values()}


def _fmt_cells(sets) -> str:
    return str(sorted(sorted(str(w) for w in s) for s in sets))[:300]


# -- engine ----------------------------------------------------------------

def engine_check(n: int, report: VerifyReport) -> KLTable:
    """KL cells against insertion tableaux, plus counts and KL sanity."""
    table = kl_table(SymmetricGroup(n))
    elems = table.elements
    right, left, both = (table.cells(s) for s in ("right", "left", "two-sided"))
    rs_right = _fibers(elems, tableau_of_permutation)
    rs_left = _fibers(elems, lambda w: tableau_of_permutation(inverse(w)))
    report.check(right.as_sets() == rs_right,
                 lambda: f"S{n}: right cells != insertion-tableau fibers: {_fmt_cells(right.as_sets() ^ rs_right)}")
    report.check(left.as_sets() == rs_left,
                 lambda: f"S{n}: left cells != recording-tableau fibers")
    report.check(len(right) == oracles.count_involutions(n),
                 f"S{n}: {len(right)} right cells, expected {oracles.count_involutions(n)}")
    report.check(len(both) == oracles.count_partitions(n),
                 f"S{n}: {len(both)} two-sided cells, expected {oracles.count_partitions(n)}")
    for w in elems:
        report.check(right.cell_id(w) is not None and
                     {inverse(y) for y in _block_of(right, w)} == _block_of(left, inverse(w)),
                     lambda: f"S{n}: right cell of {w} is not the inverse of the left cell of {inverse(w)}")
    # two-sided cells coarsen both one-sided partitions
    for part in (right, left):
        for block in part.blocks():
            report.check(len({both.cell_id(w) for w in block}) == 1,
                         f"S{n}: {part.side} cell of {block[0]} splits across two-sided cells")
    # right cells per two-sided cell = number of standard tableaux of its shape
    for block in both.blocks():
        shape = tableau_of_permutation(block[0]).shape()
        n_right = len({right.cell_id(w) for w in block})
        report.check(n_right == len(standard_tableaux(shape)),
                     f"S{n}: two-sided cell of shape {shape} has {n_right} right cells")
    lens = table.lengths
    for (x, w), poly in table._p.items():
        report.check(bool(poly) and poly[0] == 1, f"S{n}: constant term of P[{elems[x]},{elems[w]}] is not 1")
        report.check(all(c >= 0 for c in poly), f"S{n}: negative coefficient in P[{elems[x]},{elems[w]}]")
        if x != w:
            report.check(2 * (len(poly) - 1) <= lens[w] - lens[x] - 1,
                         f"S{n}: degree bound fails for P[{elems[x]},{elems[w]}]")
    report.checked += len(elems)
    return table


def _block_of(part, w) -> set:
    cid = part.cell_id(w)
    return {y for y in part.table.elements if part.cell_id(y) == cid}


def dihedral_check(m: int, report: VerifyReport) -> None:
    table = KLTable(DihedralGroup(m))
    left, both = table.cells("left"), table.cells("two-sided")
    sizes = sorted(len(b) for b in left.blocks())
    report.check(sizes == [1, 1, m - 1, m - 1], f"I2({m}): left cell sizes {sizes}")
    report.check(len(both) == 3, f"I2({m}): {len(both)} two-sided cells, expected 3")
    for (x, w), poly in table._p.items():
        report.check(poly == (1,), f"I2({m}): P[{table.elements[x]},{table.elements[w]}] = {poly}")
    report.checked += len(table.elements)


def spot_values(report: VerifyReport) -> None:
    t3 = kl_table(SymmetricGroup(3))
    report.check(set(t3._p.values()) == {(1,)}, "S3: some P[x,w] differs from 1")
    t4 = kl_table(SymmetricGroup(4))
    # 1+q is the only value other than 1; it sits under 3412 and 4231
    values = set(t4._p.values()) - {(1,)}
    report.check(values == {(1, 1)}, f"S4: nontrivial KL polynomial values {values}")
    x, w = (1, 3, 2, 4), (3, 4, 1, 2)
    report.check(t4.polynomial(Permutation(x), Permutation(w)) == (1, 1), "S4: P[1324,3412] != 1+q")
    for a in t4.elements:
        for b in t4.elements:
            mine = t4._p.get((t4.index[a], t4.index[b]), ())
            report.check(oracles.kl_polynomial_from_r(a.one_line, b.one_line) == mine,
                         f"S4: R-polynomial oracle disagrees on P[{a},{b}]")
    report.check(t4.mu(Permutation(x), Permutation(w)) == 1, "S4: mu(1324,3412) != 1")
    report.checked += 1


def suite_engine(ns: list[int], report: VerifyReport) -> None:
    for n in ns:
        engine_check(n, report)
    spot_values(report)
    dihedral_check(6, report)
    dihedral_check(4, report)


# -- Cells vs. variety labels, orbits and annihilators -----------------------

def suite_thm1(ns: list[int], report: VerifyReport) -> None:
    for n in ns:
        table = kl_table(SymmetricGroup(n))
        elems = table.elements
        right, left, both = (table.cells(s) for s in ("right", "left", "two-sided"))
        labels = {w: orbital_variety_label(w) for w in elems}
        report.check(_fibers(elems, labels.__getitem__) == right.as_sets(),
                     f"S{n}: variety-label fibers differ from KL right cells")
        report.check(_fibers(elems, steinberg_orbit) == both.as_sets(),
                     f"S{n}: Steinberg fibers differ from KL two-sided cells")
        report.check(_fibers(elems, lambda w: tableau_of_permutation(inverse(w))) == left.as_sets(),
                     f"S{n}: annihilator classes differ from KL left cells")
        # within a two-sided cell, labels biject with right cells
        for block in both.blocks():
            n_labels = len({labels[w] for w in block})
            n_right = len({right.cell_id(w) for w in block})
            report.check(n_labels == n_right, f"S{n}: {n_labels} labels vs {n_right} right cells")
        for w in elems:
            gk = gkdim_of_w(w)
            report.check(orbit_dim(steinberg_orbit(w), n) == 2 * gk,
                         f"S{n}: orbit dim of {w} is not twice GKdim {gk}")
            report.check(label_dim(labels[w], n) == gk, f"S{n}: label dim of {w} != GKdim {gk}")
            report.check(gkdim_weight(highest_weight_of_w(w)).gkdim == gk,
                         f"S{n}: GKdim of -w rho differs from tableau GKdim for {w}")
        # annihilators_equal(w, y) <=> w^-1 ~R y^-1, pairwise
        cid = {w: right.cell_id(inverse(w)) for w in elems}
        for w, y in combinations(elems, 2):
            if annihilators_equal(w, y) != (cid[w] == cid[y]):
                report.failures.append(f"S{n}: annihilators_equal({w},{y}) disagrees with inverse right cells")
        report.checked += len(elems)


# -- Minimal GK dimension (permutation side) ----------------------------------

def worked_examples(report: VerifyReport) -> None:
    report.check(rank_word((1, 4, 9, 0)) == Permutation((2, 3, 4, 1)), "rank word of (1,4,9,0)")
    report.check(rank_word((1, 4, 9, 1, 0)) == Permutation((2, 4, 5, 3, 1)), "rank word of (1,4,9,1,0)")
    t = highest_weight_of_w(hat_word(5, 3))
    report.check(t == tuple(map(Fraction, (1, 0, 2, -1, -2))), f"-hat(5,3) rho = {format_weight(t)}")
    report.check(minimal_variety_of_weight(t) == SimpleRootClosure(2), "variety of (1,0,2,-1,-2)")
    report.check(orbital_variety_label(hat_word(5, 3)) == SimpleRootClosure(2), "label of hat(5,3)")


def suite_thm2(ns: list[int], report: VerifyReport) -> None:
    worked_examples(report)
    for n in ns:
        hats = {tableau_of_permutation(hat_word(n, k)): k for k in range(2, n + 1)}
        minimal = set()
        for w in SymmetricGroup(n).elements():
            gk = gkdim_of_w(w)
            tab = tableau_of_permutation(w)
            in_fiber = tab in hats
            report.check((gk == n - 1) == in_fiber, f"S{n}: {w} has GKdim {gk}, hat fiber {in_fiber}")
            report.check((gk == n - 1) == (tab.column_lengths() == (n - 1, 1)),
                         f"S{n}: GKdim/column criterion disagree on {w}")
            if gk != n - 1:
                continue
            minimal.add(w)
            k = hats.get(tab)
            t = highest_weight_of_w(w)
            label = minimal_variety_of_weight(t)
            report.check(k is not None and label.p == k - 1, f"S{n}: {w} has label {label}, hat index {k}")
            wit = corollary_pq_witnesses(t)
            report.check(bool(wit), f"S{n}: no dominance witness for -w rho, w={w}")
            if len(wit) == 1:
                report.check(wit[0].p == label.p, f"S{n}: dominance p={wit[0].p} vs tableau p={label.p} for {w}")
            elif wit:
                report.notes.append(f"S{n}: w={w} has witnesses p={[x.p for x in wit]}")
        expected = (n - 1) ** 2
        report.check(len(minimal) == expected, f"S{n}: {len(minimal)} elements of GKdim n-1, expected {expected}")
        for k in range(2, n + 1):
            label = orbital_variety_label(hat_word(n, k))
            report.check(label == SimpleRootClosure(k - 1), f"S{n}: hat({n},{k}) labelled {label}")
        report.checked += len(SymmetricGroup(n).elements())


# -- Richardson elements and nilradicals -----------------------------------

def _subsets(n: int):
    for r in range(n):
        for combo in combinations(range(1, n), r):
            yield ParabolicSubset(n, frozenset(combo))


def _block_dominant(t, subset: ParabolicSubset) -> bool:
    for block in subset.block_ranges():
        seg = [t[i - 1] for i in block]
        if not all(a > b for a, b in zip(seg, seg[1:])):
            return False
    return True


def suite_thm3(ns: list[int], report: VerifyReport) -> None:
    for n in ns:
        elems = SymmetricGroup(n).elements() if n <= 6 else None
        table = kl_table(SymmetricGroup(n)) if n <= 5 else None
        for subset in _subsets(n):
            data = richardson_data(subset)
            tag = f"n={n} blocks={data.blocks}"
            tab = tableau_of_permutation(data.w_I)
            report.check(tab.shape() == data.orbit.jordan_type,
                         f"{tag}: shape {tab.shape()} != dual blocks {data.orbit.jordan_type}")
            report.check(gkdim_of_w(data.w_I) == data.dim_u, f"{tag}: GKdim(w_I) != dim u_I")
            report.check(orbit_dim(data.orbit, n) == 2 * data.dim_u, f"{tag}: orbit dim != 2 dim u_I")
            label = orbital_variety_label(data.w_I)
            if n >= 2 and tab.shape() == (2,) + (1,) * (n - 2):
                expected = SimpleRootClosure(1 if data.blocks[0] == 1 else n - 1)
            elif len(subset.indices) == n - 1:
                expected = TableauLabel(tab)
            else:
                expected = Nilradical(subset)
            report.check(label == expected, f"{tag}: w_I labelled {label}, expected {expected}")
            if table is not None:
                part = table.cells("right")
                cid = part.cell_id(data.w_I)
                cell = {w for w in table.elements if part.cell_id(w) == cid}
                fiber = {w for w in table.elements if tableau_of_permutation(w) == tab}
                report.check(cell == fiber, f"{tag}: KL right cell of w_I != tableau fiber")
            if elems is not None:
                # modules -w rho - rho in the parabolic category of I: -w rho block-dominant
                best, arg = -1, None
                for w in elems:
                    t = highest_weight_of_w(w)
                    if _block_dominant(t, subset):
                        gk = gkdim_of_w(w)
                        if gk > best:
                            best, arg = gk, t
                report.check(best == data.dim_u, f"{tag}: max GKdim in category is {best}, dim u_I={data.dim_u}")
                if arg is not None and best == data.dim_u:
                    report.check(max_gkdim_variety(arg, subset) == Nilradical(subset),
                                 f"{tag}: max_gkdim_variety on {format_weight(arg)}")
            report.checked += 1


# -- Minimality tests on random weights -------------------------------------

def random_weight(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Mix of uniform weights and perturbed ordered ones, with a random shift."""
    shift = Fraction(rng.choice((0, 0, 1, -3)), rng.choice((1, 2, 3)))
    kind = rng.random()
    if kind < 0.4:
        coords = [rng.randint(-n, n) for _ in range(n)]
    elif kind < 0.8:
        # an ordered weight of length n-1 with one extra entry inserted
        base = sorted(rng.sample(range(-2 * n, 2 * n), n - 1), reverse=True)
        base.insert(rng.randrange(n), rng.randint(-2 * n, 2 * n))
        coords = base
    else:
        # two decreasing runs
        p = rng.randint(1, n - 1)
        a = sorted(rng.sample(range(-2 * n, 2 * n), p), reverse=True)
        b = sorted(rng.sample(range(-2 * n, 2 * n), n - p), reverse=True)
        coords = a + b
    return tuple(Fraction(c) + shift for c in coords)


def suite_corollaries(ns: list[int], report: VerifyReport, samples: int, seed: int) -> None:
    rng = random.Random(seed)
    multi = 0
    for n in ns:
        found = Counter()
        hats = {tableau_of_permutation(hat_word(n, k)): k for k in range(2, n + 1)}
        for _ in range(samples):
            t = random_weight(rng, n)
            gk = gkdim_weight(t).gkdim == n - 1
            cols = is_minimal_gkdim(t)
            wit = corollary_pq_witnesses(t)
            removal = ordered_after_removal(t) is not None
            verdicts = (gk, cols, bool(wit), removal)
            found[gk] += 1
            report.check(len(set(verdicts)) == 1,
                         lambda: f"n={n} t=({format_weight(t)}): gkdim={gk} columns={cols} "
                                 f"pq={bool(wit)} removal={removal}")
            if len(wit) > 1:
                multi += 1
                if multi <= 10:
                    report.notes.append(f"n={n} t=({format_weight(t)}): witnesses p={[x.p for x in wit]}")
            if gk:
                p = minimal_variety_of_weight(t).p
                if len(wit) == 1:
                    report.check(wit[0].p == p, f"n={n} t=({format_weight(t)}): dominance p={wit[0].p}, tableau p={p}")
                k = hats.get(tableau_of_permutation(weight_to_permutation(t)))
                report.check(k is not None and p == k - 1,
                             f"n={n} t=({format_weight(t)}): p={p} but hat index {k}")
            # shift invariance
            shifted = tuple(x + 7 for x in t)
            report.check(gkdim_weight(shifted).columns == gkdim_weight(t).columns and
                         corollary_pq_witness(shifted) == corollary_pq_witness(t) and
                         ordered_after_removal(shifted) == ordered_after_removal(t),
                         f"n={n} t=({format_weight(t)}): not shift invariant")
            report.checked += 1
        report.notes.append(f"n={n}: {found[True]} of {samples} samples have GKdim n-1")
    if multi:
        report.notes.append(f"{multi} weights with several dominance witnesses")


SUITES = ("engine", "thm1", "thm2", "thm3", "corollaries")


def resolve_ns(target: str, n: int | None, big: bool = False) -> list[int]:
    """The ranks a suite will check; raises ValueError outside supported bounds."""
    if target not in SUITES:
        raise ValueError(f"unknown verification target {target!r}")
    limit = LIMITS[target][1 if big else 0]
    if n is not None and not SMALLEST[target] <= n <= limit:
        raise ValueError(f"{target}: n must be in {SMALLEST[target]}..{limit}"
                         + ("" if big or limit == LIMITS[target][1] else " (use --big for more)"))
    return [n] if n is not None else list(range(SMALLEST[target], limit + 1))


def run(target: str, n: int | None = None, big: bool = False,
        samples: int = 10_000, seed: int = 0) -> VerifyReport:
    ns = resolve_ns(target, n, big)
    params: dict = {"n": ns}
    if target == "corollaries":
        params |= {"samples": samples, "seed": seed}
    report = VerifyReport(target, params)
    start = time.perf_counter()
    if target == "engine":
        suite_engine(ns, report)
    elif target == "thm1":
        suite_thm1(ns, report)
    elif target == "thm2":
        suite_thm2(ns, report)
    elif target == "thm3":
        suite_thm3(ns, report)
    else:
        suite_corollaries(ns, report, samples, seed)
    report.elapsed = time.perf_counter() - start
    if len(report.failures) > MAX_LISTED_FAILURES:
        extra = len(report.failures) - MAX_LISTED_FAILURES
        report.failures = report.failures[:MAX_LISTED_FAILURES] + [f"... and {extra} more"]
    return report
