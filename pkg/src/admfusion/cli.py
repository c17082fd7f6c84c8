"""Command-line frontend.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a size cap
was exceeded.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from typing import Sequence

from . import cache
from .admissible import (
    AdmissibleLevel,
    InvalidLevel,
    hopf_matrix,
    ordinary_fusion,
    ordinary_simples,
    verify_galois_twist,
    verify_modularity,
    verify_verlinde_ordinary,
)
from .config import LIMITS
from .coset import gko_decompose, verify_partition, verify_twist_balance
from .liealg import CapExceeded, LieAlgebraError, Weight, build_root_system
from .report import Report, render
from .walg import InvalidWLevel, WLevel, verify_centralizer, verify_factorization, w_fusion
from .wzw import kac_walton_table, verlinde_fusion

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

THEOREMS = ("hopf-verlinde", "galois", "modularity", "w-factorization", "centralizer",
            "twist-balance", "coset-partition", "wzw-oracle")


class InputError(ValueError):
    pass


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def _labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(a) for a in text.split(",")) if text else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("family", help="A, B, C, D, E, F or G")
    common.add_argument("rank", type=int)
    common.add_argument("--u", type=int, required=True)
    common.add_argument("--v", type=int, default=1)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--cache-dir", default=None,
                        help=f"disk cache for Weyl groups (overrides ${cache.ENV_VAR})")
    common.add_argument("--weyl-max", type=_positive, default=LIMITS.weyl_max)
    common.add_argument("--simples-max", type=_positive, default=LIMITS.simples_max)
    common.add_argument("--precision", type=_positive, default=LIMITS.precision_bits,
                        help="bits used for float renderings")

    parser = argparse.ArgumentParser(prog="admfusion", description="Exact fusion rules and modular data "
                                     "for affine and W-algebras at admissible level.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("simples", parents=[common], help="ordinary simple modules at level -h^vee + u/v")
    sub.add_parser("s-matrix", parents=[common], help="normalized S / open Hopf link ratios")
    sub.add_parser("fusion", parents=[common], help="ordinary fusion rules")
    sub.add_parser("w-fusion", parents=[common], help="principal W-algebra fusion rules")
    coset = sub.add_parser("coset-decompose", parents=[common], help="coset branching index set")
    coset.add_argument("--mu", type=_labels, default=None, help="comma-separated Dynkin labels")
    coset.add_argument("--nu", type=_labels, default=None, help="comma-separated Dynkin labels")
    verify = sub.add_parser("verify", help="check one theorem and emit a report")
    verify.add_argument("theorem", choices=THEOREMS)
    for action in common._actions:
        verify._add_action(action)
    return parser


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _grid(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _fusion_grid(table) -> str:
    names = [str(s) for s in table.simples]
    rows = [["x", *names]]
    for i, a in enumerate(names):
        cells = []
        for j in range(len(names)):
            terms = [(f"{n}*" if n > 1 else "") + names[k] for k, n in sorted(table.row(i, j).items())]
            cells.append(" + ".join(terms) if terms else "0")
        rows.append([a, *cells])
    return _grid(rows)


def _format_fusion(table, fmt: str, header: dict) -> str:
    if fmt == "json":
        return _dump(table.to_json(render, **header))
    if fmt == "csv":
        return table.to_csv()
    return _fusion_grid(table)


def _format_report(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return _dump(rep.to_json())
    if fmt == "csv":
        return _csv([["check", "pass"], *[[c["check"], str(c["pass"]).lower()] for c in rep.checks]])
    lines = [rep.summary()]
    lines += [f"{k}: {v}" for k, v in rep.header.items() if not isinstance(v, (list, dict))]
    lines += [f"FAIL {c['check']}" for c in rep.failures]
    return "\n".join(lines)


def _weight(rs, labels, what: str) -> Weight:
    if labels is None:
        return rs.zero()
    if len(labels) != rs.rank:
        raise InputError(f"{what} needs {rs.rank} labels, got {len(labels)}")
    return Weight(labels)


def _run_verify(args, rs) -> Report:
    name = args.theorem
    if name == "wzw-oracle":
        m = args.u - rs.dual_coxeter_h
        if args.v != 1 or m < 0:
            raise InputError("wzw-oracle needs an integer level: --v 1 and --u >= h^vee")
        left, right = verlinde_fusion(rs, m), kac_walton_table(rs, m)
        rep = Report("wzw-oracle", {"algebra": rs.name, "level": m, "simples": len(left)})
        rep.check("Verlinde table equals Kac-Walton table", left == right)
        rep.check("unit", not left.unit_violations())
        rep.check("commutativity", not left.symmetry_violations())
        rep.check("associativity", not left.associativity_violations())
        return rep
    if name in ("w-factorization", "centralizer", "twist-balance"):
        K = WLevel(rs, args.u, args.v)
        return {"w-factorization": verify_factorization, "centralizer": verify_centralizer,
                "twist-balance": verify_twist_balance}[name](K)
    L = AdmissibleLevel(rs, args.u, args.v)
    return {"hopf-verlinde": verify_verlinde_ordinary, "galois": verify_galois_twist,
            "modularity": verify_modularity, "coset-partition": verify_partition}[name](L)


def _run(args, out) -> int:
    rs = build_root_system(args.family, args.rank)
    fmt = args.format
    if args.command == "verify":
        rep = _run_verify(args, rs)
        _emit(_format_report(rep, fmt), out)
        return EXIT_OK if rep.passed else EXIT_FAIL
    if args.command == "w-fusion":
        K = WLevel(rs, args.u, args.v)
        _emit(_format_fusion(w_fusion(K), fmt, {**K.describe(), "rank": rs.rank}), out)
        return EXIT_OK
    L = AdmissibleLevel(rs, args.u, args.v)
    if args.command == "simples":
        simples = ordinary_simples(L)
        if fmt == "json":
            text = _dump({**L.describe(), "simples": [list(s.labels) for s in simples]})
        elif fmt == "csv":
            text = _csv([["index", "labels"], *[[i, str(s)] for i, s in enumerate(simples)]])
        else:
            text = "\n".join(str(s) for s in simples)
    elif args.command == "s-matrix":
        simples = ordinary_simples(L)
        H = hopf_matrix(L)
        if fmt == "json":
            text = _dump({**L.describe(), "simples": [list(s.labels) for s in simples], "ratios": render(H)})
        elif fmt == "csv":
            rows = [["i", "j", "M", "coeffs", "re", "im"]]
            for i, row in enumerate(H):
                for j, x in enumerate(row):
                    re, im = x.to_complex(LIMITS.precision_bits)
                    rows.append([i, j, x.order, " ".join(x.to_json()["coeffs"]), repr(re), repr(im)])
            text = _csv(rows)
        else:
            cells = [[f"{complex(*x.to_complex(LIMITS.precision_bits)):.6g}" for x in row] for row in H]
            names = [str(s) for s in simples]
            text = _grid([["", *names], *[[n, *c] for n, c in zip(names, cells)]])
    elif args.command == "fusion":
        table = verlinde_fusion(rs, L.integer_level) if L.v == 1 else ordinary_fusion(L)
        text = _format_fusion(table, fmt, {**L.describe(), "rank": rs.rank})
    else:
        d = gko_decompose(L, _weight(rs, args.mu, "--mu"), _weight(rs, args.nu, "--nu"))
        if fmt == "json":
            text = _dump(d.to_json())
        else:
            terms = d.to_json()["terms"]
            rows = [["lambda", "wlabel", "weight_mod1"],
                    *[[str(t["lambda"]), str(t["wlabel"]), t["weight_mod1"]] for t in terms]]
            text = _csv(rows) if fmt == "csv" else _grid(rows)
    _emit(text, out)
    return EXIT_OK


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    saved = dataclasses.replace(LIMITS)
    saved_dir = cache._explicit_dir
    LIMITS.weyl_max = args.weyl_max
    LIMITS.simples_max = args.simples_max
    LIMITS.precision_bits = args.precision
    if args.cache_dir is not None:
        cache.set_cache_dir(args.cache_dir)
    try:
        return _run(args, out)
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (LieAlgebraError, InvalidLevel, InvalidWLevel, InputError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    finally:
        # main() may be called repeatedly in one process
        for f in dataclasses.fields(LIMITS):
            setattr(LIMITS, f.name, getattr(saved, f.name))
        cache.set_cache_dir(saved_dir)

if __name__ == "__main__":
    sys.exit(main())
