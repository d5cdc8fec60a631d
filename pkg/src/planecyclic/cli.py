"""Command-line interface.

Commands
--------
- ``enum``:         the deduplicated classification table for a degree
- ``form``:         one normal form for (degree, m, a, b)
- ``verify``:       smooth-member search for (degree, m, a, b)
- ``special``:      the four maximal-order locus records
- ``large``:        one multiplied-order locus record (needs --ell/--kind)
- ``golden-check``: regression against the packaged reference tables

All output is deterministic for a fixed argument list and seed; results go
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .groups import EmptyLocus, large_locus, record_json_dict, very_large_records
from .normal_form import build_form, render, to_json_dict
from .tables import classify, golden_check
from .types_enum import CyclicType, TypeCandidate
from .verification import locus_nonempty


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")
    if not primes:
        raise argparse.ArgumentTypeError("empty prime list")
    return primes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planecyclic",
        description="Cyclic actions on smooth plane curves: enumeration, "
        "normal forms, verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, *, type_args=False):
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--format", choices=("plain", "latex", "json"), default="plain")
        p.add_argument("--primes", type=_parse_primes, default=None)
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)
        if type_args:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--a", type=int, required=True)
            p.add_argument("--b", type=int, required=True)

    common(sub.add_parser("enum", help="classification table for a degree"))
    common(sub.add_parser("form", help="normal form of one type"), type_args=True)
    common(sub.add_parser("verify", help="smooth-member search for one type"), type_args=True)
    common(sub.add_parser("special", help="maximal-order locus records"))
    large = sub.add_parser("large", help="multiplied-order locus record")
    common(large)
    large.add_argument("--ell", type=int, required=True)
    large.add_argument("--kind", choices=("d-1", "d", "d-2"), required=True)
    gc = sub.add_parser("golden-check", help="regression against reference tables")
    common(gc)
    gc.add_argument("--no-sampling", action="store_true",
                    help="skip the smooth-member sampling pass")
    return parser


def _row_label(row) -> str:
    rep = row.representative
    return f"{rep.m},({rep.a},{rep.b})"


def _matching_rows(d: int, m: int, a: int, b: int):
    ctype = CyclicType(m, a, b)
    return [row for row in classify(d) if row.orbit.m == m and ctype in row.orbit.members]


def _cmd_enum(args) -> int:
    rows = classify(args.degree)
    if args.format == "json":
        payload = []
        for row in rows:
            entry = to_json_dict(row.form)
            entry["representative"] = list(row.representative.pair)
            entry["members"] = sorted([t.m, t.a, t.b] for t in row.orbit.members)
            entry["cases"] = sorted(c.value for c in row.orbit.provenance)
            entry["suppressed"] = row.suppressed
            entry["notes"] = list(row.reasons)
            payload.append(entry)
        print(json.dumps(payload, indent=2))
        return 0
    fmt = args.format
    for row in rows:
        if row.suppressed:
            continue
        equation = render(row.form, fmt)
        if fmt == "latex":
            print(f"{_row_label(row)} & {equation} \\\\")
        else:
            print(f"{_row_label(row):>12}  {equation}")
    return 0


def _find_form(args):
    rows = _matching_rows(args.degree, args.m, args.a, args.b)
    if not rows:
        raise SystemExit(
            f"error: type {args.m},({args.a},{args.b}) is not admissible "
            f"for degree {args.degree}"
        )
    row = rows[0]
    return build_form(
        TypeCandidate(case=row.case, ctype=CyclicType(args.m, args.a, args.b),
                      degree=args.degree)
    )


def _cmd_form(args) -> int:
    nf = _find_form(args)
    if args.format == "json":
        print(json.dumps(to_json_dict(nf), indent=2))
    else:
        print(render(nf, args.format))
    return 0


def _cmd_verify(args) -> int:
    nf = _find_form(args)
    primes = args.primes or (1009, 2003, 10007)
    verdict = locus_nonempty(nf, trials=args.trials, primes=primes, seed=args.seed)
    if args.format == "json":
        payload = {
            "degree": args.degree,
            "m": args.m,
            "a": args.a,
            "b": args.b,
            "status": verdict.status.value,
            "trials": verdict.trials,
            "note": verdict.note,
            "witness": None
            if verdict.witness is None
            else {
                "prime": verdict.witness.p,
                "coefficients": sorted(
                    [list(mo) + [c] for mo, c in verdict.witness.coeffs.items()]
                ),
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{args.m},({args.a},{args.b})  {verdict.status.value}"
              f"  trials={verdict.trials}" + (f"  ({verdict.note})" if verdict.note else ""))
    return 0 if verdict.status.value == "smooth-witness-found" else 1


def _cmd_special(args) -> int:
    records = very_large_records(args.degree)
    if args.format == "json":
        print(json.dumps([record_json_dict(r) for r in records], indent=2))
        return 0
    for rec in records:
        equation = render(rec.curve, "latex" if args.format == "latex" else "plain")
        note = f"  [{rec.exceptions_note}]" if rec.exceptions_note else ""
        print(f"{rec.kind:>10}: {rec.ctype!r:>12}  |Aut| = {rec.group.order:<4} "
              f"({rec.group.name})  {equation}{note}")
    return 0


def _cmd_large(args) -> int:
    rec = large_locus(args.degree, args.ell, args.kind)
    if isinstance(rec, EmptyLocus):
        if args.format == "json":
            print(json.dumps({"kind": rec.kind, "degree": rec.degree,
                              "ell": rec.ell, "empty": True, "reason": rec.reason}))
        else:
            print(f"{rec.kind} (degree {rec.degree}, ell={rec.ell}): {rec.reason}")
        return 1
    if args.format == "json":
        print(json.dumps(record_json_dict(rec), indent=2))
    else:
        equation = render(rec.curve, "latex" if args.format == "latex" else "plain")
        print(f"{rec.kind}: {rec.ctype!r}  group {rec.group.name} "
              f"(order {rec.group.order})  {equation}")
        if rec.exceptions_note:
            print(f"note: {rec.exceptions_note}")
    return 0


def _cmd_golden_check(args) -> int:
    primes = args.primes or (211,)
    report = golden_check(
        args.degree,
        primes=primes,
        trials=args.trials,
        seed=args.seed,
        sample_loci=not args.no_sampling,
    )
    if args.format == "json":
        print(json.dumps({
            "degree": report.degree,
            "ok": report.ok,
            "checked": report.checked,
            "entries": [{"kind": e.kind, "detail": e.detail} for e in report.entries],
        }, indent=2))
    else:
        print(report)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.degree < 4:
        parser.error(f"--degree must be at least 4, got {args.degree}")
    if args.verb == "golden-check" and not 4 <= args.degree <= 9:
        parser.error("golden-check covers degrees 4..9")
    handlers = {
        "enum": _cmd_enum,
        "form": _cmd_form,
        "verify": _cmd_verify,
        "special": _cmd_special,
        "large": _cmd_large,
        "golden-check": _cmd_golden_check,
    }
    return handlers[args.verb](args)


if __name__ == "__main__":
    sys.exit(main())
