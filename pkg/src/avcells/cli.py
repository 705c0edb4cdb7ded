"""Command-line entry point: ``avcells <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import defaultdict

from . import verify
from .coxcore import (
    DihedralGroup, ParabolicSubset, SymmetricGroup, format_weight, inverse,
    parse_permutation, parse_weight,
)
from .klengine import CacheError, KLTable, NotBruhatComparable, poly_str
from .modinv import gkdim_from_columns, gkdim_weight, is_minimal_gkdim
from .tableaux import (
    NonIntegralWeight, tableau_of_permutation, tableau_of_weight,
    weight_to_permutation,
)
from .varieties import (
    PreconditionError, max_gkdim_variety, minimal_variety_of_weight,
    orbital_variety_label, steinberg_orbit,
)

log = logging.getLogger("avcells")


class UsageError(Exception):
    pass


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))


def _source(args):
    """Return ('weight', t) or ('perm', w) from mutually exclusive flags."""
    if args.weight is not None:
        return "weight", parse_weight(args.weight)
    return "perm", parse_permutation(args.perm)


def cmd_tableau(args) -> int:
    kind, value = _source(args)
    tab = tableau_of_weight(value) if kind == "weight" else tableau_of_permutation(value)
    record = {
        "tableau": str(tab),
        "shape": list(tab.shape()),
        "columns": list(tab.column_lengths()),
        "a": tab.a_value(),
    }
    _emit(args, record, [
        str(tab),
        f"shape: {','.join(map(str, tab.shape()))}",
        f"columns: {','.join(map(str, tab.column_lengths()))}",
        f"a: {tab.a_value()}",
    ])
    return 0


def cmd_gkdim(args) -> int:
    kind, value = _source(args)
    if kind == "weight":
        rep = gkdim_weight(value)
        record = rep.as_record()
    else:
        cols = tableau_of_permutation(value).column_lengths()
        record = {
            "perm": str(value),
            "columns": list(cols),
            "a": sum(c * (c - 1) // 2 for c in cols),
            "gkdim": gkdim_from_columns(cols),
        }
    _emit(args, record, [
        str(record["gkdim"]),
        f"columns: {','.join(map(str, record['columns']))}  a: {record['a']}",
    ])
    return 0


def cmd_variety(args) -> int:
    kind, value = _source(args)
    if kind == "weight":
        w = weight_to_permutation(value)
        if args.parabolic is not None:
            label = max_gkdim_variety(value, ParabolicSubset.parse(args.parabolic, len(value)))
        elif len(value) >= 2 and is_minimal_gkdim(value):
            label = minimal_variety_of_weight(value)
        else:
            label = orbital_variety_label(w)
    else:
        if args.parabolic is not None:
            raise UsageError("--parabolic needs --weight")
        w = value
        label = orbital_variety_label(w)
    orbit = steinberg_orbit(w)
    record = {"label": str(label), "w": str(w), "orbit": str(orbit)}
    _emit(args, record, [str(label), f"w: {w}  orbit: {orbit}"])
    return 0


def _model(args):
    if args.dihedral is not None:
        return DihedralGroup(args.dihedral)
    if args.n is None:
        raise UsageError("give --n or --dihedral")
    if not 1 <= args.n <= 7:
        raise UsageError("--n must be in 1..7")
    return SymmetricGroup(args.n)


def _table(model, cache: str | None) -> KLTable:
    if cache and os.path.exists(cache):
        return KLTable(model, cache=cache)
    table = KLTable(model)
    if cache:
        table.save(cache)
    return table


def _rs_cells(n: int, side: str) -> list[list]:
    key = {
        "right": tableau_of_permutation,
        "left": lambda w: tableau_of_permutation(inverse(w)),
        "two-sided": lambda w: tableau_of_permutation(w).shape(),
    }[side]
    groups = defaultdict(list)
    for w in SymmetricGroup(n).elements():
        groups[key(w)].append(w)
    return sorted(groups.values(), key=lambda g: SymmetricGroup(n).elements().index(g[0]))


def cmd_cells(args) -> int:
    model = _model(args)
    if args.method == "rs":
        if not isinstance(model, SymmetricGroup):
            raise UsageError("--method rs only applies to the symmetric group")
        blocks = _rs_cells(model.n, args.side)
    else:
        blocks = _table(model, args.cache).cells(args.side).blocks()
    listing = [[model.format(w) for w in b] for b in blocks]
    record = {"model": model.model_id, "side": args.side, "method": args.method,
              "count": len(listing), "cells": listing}
    _emit(args, record, [f"{len(listing)} cells"] + [" ".join(b) for b in listing])
    return 0


def cmd_klpoly(args) -> int:
    model = _model(args)
    table = _table(model, args.cache)
    x, w = model.parse(args.x), model.parse(args.w)
    poly = table.polynomial(x, w)
    record = {"model": model.model_id, "x": model.format(x), "w": model.format(w),
              "poly": poly_str(poly), "mu": table.mu(x, w) if x != w else 0}
    _emit(args, record, [poly_str(poly)])
    return 0


def cmd_cache(args) -> int:
    if args.action == "build":
        model = _model(args)
        table = KLTable(model)
        table.save(args.cache)
        record = {"model": model.model_id, "path": args.cache, "records": len(table._p)}
        _emit(args, record, [f"wrote {len(table._p)} records for {model.model_id} to {args.cache}"])
        return 0
    with open(args.cache) as fh:
        header = fh.readline().split()
    if len(header) != 3 or header[0] != "KLCACHE":
        raise CacheError(f"{args.cache}: not a KL cache file")
    model_id = header[2]
    if model_id.startswith("S"):
        model = SymmetricGroup(int(model_id[1:]))
    elif model_id.startswith("I2(") and model_id.endswith(")"):
        model = DihedralGroup(int(model_id[3:-1]))
    else:
        raise CacheError(f"{args.cache}: unknown model {model_id}")
    table = KLTable(model, cache=args.cache)
    fresh = KLTable(model)
    same = table._p == fresh._p
    record = {"model": model_id, "version": int(header[1]), "records": len(table._p), "valid": same}
    _emit(args, record, [f"{model_id}: version {header[1]}, {len(table._p)} records, "
                         f"{'matches' if same else 'DIFFERS FROM'} a fresh computation"])
    return 0 if same else 1


def cmd_verify(args) -> int:
    try:
        verify.resolve_ns(args.target, args.n, args.big)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify.run(args.target, n=args.n, big=args.big, samples=args.samples, seed=args.seed)
    if args.format == "json":
        print(json.dumps(report.as_record(timing=args.timing), sort_keys=True))
    else:
        ns = ",".join(map(str, report.params["n"]))
        status = "ok" if report.ok else "FAIL"
        print(f"{report.target} n={ns}: {status}, {report.checked} checked, {len(report.failures)} failures")
        for line in report.notes:
            print(f"  note: {line}")
        for line in report.failures:
            print(f"  failure: {line}")
        if args.timing:
            print(f"  elapsed: {report.elapsed:.2f}s")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avcells",
        description="KL cells, tableaux, GK dimension and associated varieties for sl(n).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)

    def with_source(p, parabolic=False):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--weight", help="lambda+rho, e.g. 1,4,9,0 or 3/2,1/2,-1/2,-3/2")
        g.add_argument("--perm", help="one-line permutation, e.g. 2,3,4,1")
        if parabolic:
            p.add_argument("--parabolic", help="subset I of simple roots, e.g. 1,3")

    with_source(sub.add_parser("tableau", help="insertion tableau of a weight or permutation"))
    with_source(sub.add_parser("gkdim", help="Gelfand-Kirillov dimension"))
    with_source(sub.add_parser("variety", help="associated variety label"), parabolic=True)

    def with_model(p):
        p.add_argument("--n", type=int, help="symmetric group S_n")
        p.add_argument("--dihedral", type=int, metavar="M", help="dihedral group I2(M)")
        p.add_argument("--cache", help="KL cache file (read if present, else written)")

    p = sub.add_parser("cells", help="cell partition of a Coxeter group")
    with_model(p)
    p.add_argument("--side", choices=("left", "right", "two-sided"), default="right")
    p.add_argument("--method", choices=("rs", "kl"), default="kl")

    p = sub.add_parser("klpoly", help="KL polynomial P[x,w]")
    with_model(p)
    p.add_argument("x")
    p.add_argument("w")

    p = sub.add_parser("verify", help="desk-scale verification suites")
    p.add_argument("target", choices=verify.SUITES)
    p.add_argument("--n", type=int, help="check this n only (default: the full supported range)")
    p.add_argument("--big", action="store_true", help="allow n = 6 for engine/thm1")
    p.add_argument("--samples", type=int, default=10_000, help="weights per n for corollaries")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="report elapsed time")

    p = sub.add_parser("cache", help="build or inspect a KL cache file")
    p.add_argument("action", choices=("build", "inspect"))
    p.add_argument("--cache", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--dihedral", type=int, metavar="M")
    return parser


COMMANDS = {
    "tableau": cmd_tableau,
    "gkdim": cmd_gkdim,
    "variety": cmd_variety,
    "cells": cmd_cells,
    "klpoly": cmd_klpoly,
    "verify": cmd_verify,
    "cache": cmd_cache,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, NonIntegralWeight, PreconditionError, NotBruhatComparable,
            CacheError, ValueError, OSError) as exc:
        print(f"avcells {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
