"""Command-line entry point: ``legmat {field,verify,scan,gallery,classnum}``.

Exit codes: 0 success, 1 unexpected mismatch, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import classnum, gallery
from .errors import ConditionFailed
from .field import FieldOverflow, make_field, make_prime_field
from .harness import ScanConfig, Theorem, emit_report, scan, verify_case

GALLERY_CHOICES = ("sun-recip", "inv-squares", "sdp", "wsn", "wu-wang", "luo-sun")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _parse_theorems(text: str) -> tuple[Theorem, ...]:
    if text == "all":
        return tuple(Theorem)
    try:
        return tuple(Theorem(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_k(text: str) -> int | None:
    return None if text == "all" else int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="legmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("field", help="print the field construction for F_q as JSON")
    f.add_argument("--q", type=int, required=True)

    v = sub.add_parser("verify", help="run one (q, k, theorem) comparison")
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])

    s = sub.add_parser("scan", help="verify every case up to q_max")
    s.add_argument("--q-max", type=int, required=True)
    s.add_argument("--theorems", type=_parse_theorems, default=tuple(Theorem))
    s.add_argument("--k", type=_parse_k, default=None)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out")
    s.add_argument("--strict", action="store_true",
                   help="count known corollary discrepancies as failures")

    g = sub.add_parser("gallery", help="evaluate one of the related determinants")
    g.add_argument("--which", required=True, choices=GALLERY_CHOICES)
    g.add_argument("--p", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--c", type=int)

    c = sub.add_parser("classnum", help="h(-p) two ways plus Mordell's congruence")
    c.add_argument("--p", type=int, required=True)
    return parser


def _field_info(q: int) -> dict:
    F = make_field(q)
    return {
        "q": F.q, "p": F.p, "n": F.n,
        "modulus": list(F.modulus) if F.modulus else None,
        "generator": F.g.coeffs,
        "factorization": [list(t) for t in F.factorization],
    }


def _gallery(args) -> tuple[dict, int]:
    which = args.which
    p = args.p if args.p is not None else args.q
    if p is None:
        raise ValueError("--p (or --q) is required")
    out = {"which": which, "p": p}
    if which == "sun-recip":
        det, exp = gallery.sun_reciprocal_det(p), gallery.sun_reciprocal_expected(p)
    elif which == "inv-squares":
        det, exp = gallery.inverse_squares_det(p), gallery.inverse_squares_expected(p)
    elif which == "wsn":
        F = make_field(p)
        out = {"which": which, "q": F.q}
        det, exp = gallery.wsn_det(F), gallery.wsn_expected(F)
    elif which == "wu-wang":
        if args.k is None:
            raise ValueError("--k is required")
        out["k"] = args.k
        try:
            det = gallery.wu_wang_det(p, args.k)
        except ConditionFailed as exc:
            out["note"] = str(exc)
            return out, 0
        exp = gallery.wu_wang_expected(p, args.k)
    elif which == "sdp":
        if args.d is None:
            raise ValueError("--d is required")
        det, sym = gallery.S_dp(p, args.d)
        out.update(d=args.d, det=det, symbol_of_neg=sym)
        return out, 0
    else:
        det, sym = gallery.luo_sun_report(p, args.c or 0, args.d or 0)
        out.update(c=args.c or 0, d=args.d or 0, det=det, symbol=sym)
        return out, 0
    out.update(det=det, expected=exp, match=det == exp)
    return out, 0 if det == exp else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "field":
            print(json.dumps(_field_info(args.q)))
            return 0
        if args.command == "verify":
            rec = verify_case(make_field(args.q), args.k, args.theorem)
            print(json.dumps(asdict(rec)))
            return 1 if rec.status() == "fail" else 0
        if args.command == "classnum":
            make_prime_field(args.p)
            print(json.dumps(asdict(classnum.class_number(args.p))))
            return 0
        if args.command == "gallery":
            out, code = _gallery(args)
            print(json.dumps(out))
            return code
        config = ScanConfig(q_max=args.q_max, theorems=args.theorems, k=args.k,
                            jobs=args.jobs, out=args.out, format=args.format,
                            strict=args.strict)
    except (ValueError, FieldOverflow) as exc:
        print(f"legmat: error: {exc}", file=sys.stderr)
        return 2

    report = scan(config)
    try:
        text = emit_report(report.records, config.format, config.out, config.strict)
    except OSError as exc:
        print(f"legmat: error: {exc}", file=sys.stderr)
        return 2
    if config.out is None:
        sys.stdout.write(text)
    print(json.dumps(report.summary), file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
