"""Command line interface.

Subcommands mirror the library: count, enumerate, bounds, rankin,
annuli-check, greedy-hur, freegroup (greedy / density / witness), and
verify-all.  Output is deterministic: JSON objects have sorted keys,
exact rationals render as "p/q" strings, and decimal values are printed
to 12 significant digits, so identical invocations produce identical
bytes.

Results go to stdout unless --output gives a path; with no --output the
GPFREE_OUTPUT_DIR environment variable, if set, names a directory that
receives <subcommand>.<ext> instead.

Exit status: 0 on success, 1 when a verification subcommand finds a
failure, 2 for malformed invocations (argparse's convention).
"""

from __future__ import annotations

import argparse
import decimal
import json
import os
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from .checks import run_checks
from .counting import NormCount, count_norm_exact, count_upto
from .density import (
    DEFAULT_ANNULI,
    lower_bound_density,
    rankin_density,
    upper_bound_density,
    verify_annuli_gp_free,
)
from .freegroup import (
    greedy_set_contains,
    greedy_set_density,
    greedy_words_bruteforce,
    greedy_words_density,
    index_of,
    ternary,
    witness_progression,
)
from .greedy import build_greedy
from .quaternion import enumerate_norm

__all__ = ["main", "run"]


def _sig12(value: Fraction | Decimal) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = 12
        if isinstance(value, Decimal):
            return str(+value)
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _rat(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _write(text: str, args, extension: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
        return
    out_dir = os.environ.get("GPFREE_OUTPUT_DIR")
    if out_dir:
        name = args.command if not getattr(args, "subcommand", None) else (
            f"{args.command}-{args.subcommand}"
        )
        Path(out_dir, f"{name}.{extension}").write_text(text)
        return
    sys.stdout.write(text)


def _emit_json(payload: dict, args) -> None:
    _write(json.dumps(payload, sort_keys=True, indent=2) + "\n", args, "json")


def _cmd_count(args) -> int:
    if args.table is not None:
        table = NormCount.build(args.table)
        if args.emit == "csv":
            import io

            buf = io.StringIO()
            table.write_csv(buf)
            _write(buf.getvalue(), args, "csv")
            return 0
        rows = [
            {"norm": n, "count": table.per_norm[n], "cumulative": table.cumulative[n]}
            for n in range(1, args.table + 1)
        ]
        _emit_json(
            {"command": "count", "max_norm": args.table, "provenance": "odd-divisor-sieve",
             "rows": rows},
            args,
        )
        return 0
    if args.upto is not None:
        _emit_json(
            {"command": "count", "provenance": "divisor-sum-swap",
             "total": count_upto(args.upto), "upto": args.upto},
            args,
        )
        return 0
    _emit_json(
        {"command": "count", "count": count_norm_exact(args.norm), "norm": args.norm,
         "provenance": "odd-divisor-formula"},
        args,
    )
    return 0


def _cmd_enumerate(args) -> int:
    elements = enumerate_norm(args.norm)
    if args.emit == "text":
        _write("".join(f"{q}\n" for q in elements), args, "txt")
        return 0
    _emit_json(
        {"command": "enumerate", "count": len(elements),
         "elements": [str(q) for q in elements], "norm": args.norm,
         "provenance": "doubled-coordinate-lattice-scan"},
        args,
    )
    return 0


def _cmd_bounds(args) -> int:
    lower = lower_bound_density()
    upper = upper_bound_density(args.terms)
    _emit_json(
        {
            "command": "bounds",
            "lower": {"decimal": _sig12(lower), "rational": _rat(lower)},
            "provenance": "annuli-vs-doubling-exclusion",
            "terms": "inf" if args.terms is None else args.terms,
            "upper": {"decimal": _sig12(upper), "rational": _rat(upper)},
        },
        args,
    )
    return 0


def _cmd_rankin(args) -> int:
    est = rankin_density(args.max_prime, args.max_exponent)
    _emit_json(
        {
            "command": "rankin",
            "monotone_direction": est.monotone_direction,
            "provenance": "euler-product-truncation",
            "truncation": {"max_exponent": est.truncation[1], "max_prime": est.truncation[0]},
            "value": _sig12(est.value),
        },
        args,
    )
    return 0


def _cmd_annuli(args) -> int:
    ok = verify_annuli_gp_free(args.max_norm, DEFAULT_ANNULI)
    _emit_json(
        {"command": "annuli-check", "max_norm": args.max_norm,
         "progression_free": ok, "provenance": "norm-interval-scan"},
        args,
    )
    return 0 if ok else 1


def _cmd_greedy_hur(args) -> int:
    report = build_greedy(args.max_norm)
    if args.emit == "csv":
        lines = ["element,norm,status,witness_a,witness_b,witness_ratio"]
        for q in report.included:
            lines.append(f"{q},{q.norm()},included,,,")
        for q, (a, b, r) in report.excluded:
            lines.append(f"{q},{q.norm()},excluded,{a},{b},{r}")
        _write("\n".join(lines) + "\n", args, "csv")
        return 0
    per_norm: dict[str, list[str]] = {}
    for q in report.included:
        per_norm.setdefault(str(q.norm()), []).append(str(q))
    _emit_json(
        {
            "command": "greedy-hur",
            "excluded": [
                {"element": str(q),
                 "witness": {"a": str(a), "b": str(b), "ratio": str(r)}}
                for q, (a, b, r) in report.excluded
            ],
            "included_per_norm": per_norm,
            "included_total": len(report.included),
            "max_norm": report.max_norm,
            "provenance": "greedy-by-increasing-norm",
        },
        args,
    )
    return 0


def _cmd_freegroup(args) -> int:
    if args.subcommand == "greedy":
        kept = sorted(greedy_words_bruteforce(args.max_len), key=index_of)
        _emit_json(
            {
                "command": "freegroup-greedy",
                "count": len(kept),
                "included": [str(w) for w in kept],
                "max_len": args.max_len,
                "provenance": "alternating-word-greedy",
            },
            args,
        )
        return 0
    if args.subcommand == "density":
        words = greedy_words_density(args.n)
        ints = greedy_set_density(args.n)
        _emit_json(
            {
                "command": "freegroup-density",
                "integers": {"decimal": _sig12(ints), "rational": _rat(ints)},
                "n": args.n,
                "provenance": "greedy-share-closed-form",
                "words": {"decimal": _sig12(words), "rational": _rat(words)},
            },
            args,
        )
        return 0
    wit = witness_progression(args.n)
    payload = {
        "command": "freegroup-witness",
        "member": greedy_set_contains(args.n),
        "n": args.n,
        "provenance": "ternary-digit-construction",
        "ternary": ternary(args.n),
    }
    if wit is None:
        payload["witness"] = None
    else:
        a, b, r = wit
        payload["witness"] = {
            "a": a, "a_ternary": ternary(a),
            "b": b, "b_ternary": ternary(b),
            "ratio": r, "ratio_ternary": ternary(r),
        }
    _emit_json(payload, args)
    return 0


def _cmd_verify_all(args) -> int:
    results = run_checks(quick=args.quick)
    width = max(len(r.name) for r in results)
    for r in results:
        flag = "PASS" if r.ok else "FAIL"
        sys.stdout.write(f"{flag} {r.name:<{width}} ({r.seconds:6.2f}s) {r.detail}\n")
    failed = [r for r in results if not r.ok]
    sys.stdout.write(
        f"{len(results) - len(failed)}/{len(results)} checks passed\n"
    )
    return 0 if not failed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpfree",
        description="Hurwitz quaternion arithmetic and progression-free densities",
    )
    parser.add_argument("--output", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count Hurwitz integers by norm")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--norm", type=int, help="count elements of exactly this norm")
    group.add_argument("--upto", type=int, help="count elements with norm up to this bound")
    group.add_argument("--table", type=int, help="tabulate counts for all norms up to this bound")
    p.add_argument("--emit", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="list all elements of one norm")
    p.add_argument("--norm", type=int, required=True)
    p.add_argument("--emit", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("bounds", help="density bounds for progression-free sets")
    p.add_argument(
        "--terms", type=int, default=None,
        help="exclusion terms for the upper bound (default: full series)",
    )
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("rankin", help="density of elements with Rankin norm")
    p.add_argument("--max-prime", type=int, default=10**6)
    p.add_argument("--max-exponent", type=int, default=40)
    p.set_defaults(func=_cmd_rankin)

    p = sub.add_parser("annuli-check", help="verify the annular norm set has no progression")
    p.add_argument("--max-norm", type=int, default=48 * 48)
    p.set_defaults(func=_cmd_annuli)

    p = sub.add_parser("greedy-hur", help="greedy progression-free quaternion selection")
    p.add_argument("--max-norm", type=int, default=49)
    p.add_argument("--emit", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_greedy_hur)

    p = sub.add_parser("freegroup", help="greedy sets over two involution generators")
    fsub = p.add_subparsers(dest="subcommand", required=True)
    fp = fsub.add_parser("greedy", help="greedy word selection up to a length")
    fp.add_argument("--max-len", type=int, default=18)
    fp.set_defaults(func=_cmd_freegroup)
    fp = fsub.add_parser("density", help="closed-form greedy densities at scale 3^n")
    fp.add_argument("--n", type=int, default=1)
    fp.set_defaults(func=_cmd_freegroup)
    fp = fsub.add_parser("witness", help="blocking progression for an integer")
    fp.add_argument("--n", type=int, required=True)
    fp.set_defaults(func=_cmd_freegroup)

    p = sub.add_parser("verify-all", help="run the full check registry")
    p.add_argument(
        "--quick", action="store_true",
        help="skip the max-norm-343 greedy run",
    )
    p.set_defaults(func=_cmd_verify_all)

    return parser


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
