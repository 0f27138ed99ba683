"""Command-line front end.

Subcommands: ``lemma1``, ``lemma2``, ``member``, ``witness``.  Exit codes:
0 success / certified positive, 1 certified negative or failed
certificate, 2 invalid input, 3 undecided.  Output is human-readable
text by default or machine-readable JSON with ``--format json``; the
witness report follows the documented schema either way.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (is_totally_S_adic, lemma1_certify, lemma2_certify)
from .errors import CertificateFailure, InputError, PreconditionError
from .fields import FIELDS_BY_NAME, QQ
from .padic import DEFAULT_PRECISION
from .parsing import format_element, parse_field_element, parse_poly
from .places import PlaceSet, parse_place, parse_place_set
from .witness import SCHEMA_VERSION, SampleSpec, theorem_witness

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_UNDECIDED = 3


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--field", choices=sorted(FIELDS_BY_NAME),
                     default="Q", help="base field (default Q)")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", help="write the report to this path")
    sub.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                     help=f"working digits (default {DEFAULT_PRECISION})")
    sub.add_argument("--seed", type=int, default=0,
                     help="sampling seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totsadic",
        description="Exact splitting certificates for the quadratic family"
                    " X^2+X-gamma(y,t)^2 at finite sets of places")
    commands = parser.add_subparsers(dest="command", required=True)

    p1 = commands.add_parser("lemma1",
                             help="certify v(gamma(y,t)) > 0 at one place")
    _add_common(p1)
    p1.add_argument("--place", required=True)
    p1.add_argument("--t", required=True)
    p1.add_argument("--y", required=True, help="comma-separated y values")

    p2 = commands.add_parser("lemma2",
                             help="certify generic irreducibility at t")
    _add_common(p2)
    p2.add_argument("--t", required=True)
    p2.add_argument("--allow-boundary", action="store_true",
                    help="inspect t in {0,-1} instead of rejecting it")

    pm = commands.add_parser("member",
                             help="totally-S-adic membership of a minimal"
                                  " polynomial")
    _add_common(pm)
    pm.add_argument("--places", required=True)
    pm.add_argument("--minpoly", required=True)

    pw = commands.add_parser("witness",
                             help="run the end-to-end witness pipeline")
    _add_common(pw)
    pw.add_argument("--places", required=True)
    pw.add_argument("--height", type=int, default=None,
                    help="sample height bound (default 50 over Q, 4 over F2u)")
    pw.add_argument("--samples", type=int, default=200,
                    help="number of samples (default 200)")
    pw.add_argument("--y", default=None,
                    help="explicit comma-separated y list instead of"
                         " enumeration")
    return parser


def _emit(args, payload: dict, text_lines: list):
    if args.format == "json":
        rendered = json.dumps(payload, indent=2)
    else:
        rendered = "\n".join(text_lines)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(rendered + "\n")
    else:
        print(rendered)


def _parse_y_list(raw: str, base) -> list:
    ys = [parse_field_element(part, base)
          for part in raw.split(",") if part.strip()]
    if not ys:
        raise InputError("empty y list")
    return ys


def cmd_lemma1(args) -> int:
    base = FIELDS_BY_NAME[args.field]
    place = parse_place(args.place)
    if place.base_field is not base:
        raise InputError(f"place {place} does not live on {base.name}")
    t = parse_field_element(args.t, base)
    ys = _parse_y_list(args.y, base)
    certs = [(y, lemma1_certify(y, t, place)) for y in ys]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": {"command": "lemma1", "field": base.name,
                   "place": str(place), "t": format_element(base, t)},
        "certificates": [dict(y=format_element(base, y), **c.to_json())
                         for y, c in certs],
    }
    lines = [f"t = {format_element(base, t)} uniformizes {place}"]
    for y, c in certs:
        mark = "holds" if c.holds else "FAILS"
        lines.append(f"  y = {format_element(base, y)}: case {c.case},"
                     f" v(gamma) = {c.to_json()['v_of_gamma']} -> {mark}")
    _emit(args, payload, lines)
    return EXIT_OK if all(c.holds for _, c in certs) else EXIT_NEGATIVE


def cmd_lemma2(args) -> int:
    base = FIELDS_BY_NAME[args.field]
    t = parse_field_element(args.t, base)
    cert = lemma2_certify(t, base, allow_boundary=args.allow_boundary)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": {"command": "lemma2", "field": base.name,
                   "t": format_element(base, t),
                   "allow_boundary": args.allow_boundary},
        "lemma2": cert.to_json(base),
    }
    lines = [f"t = {format_element(base, t)} over {base.name}:"
             f" {cert.verdict}"]
    for key, value in cert.evidence.items():
        lines.append(f"  {key}: {value}")
    _emit(args, payload, lines)
    return EXIT_OK if cert.irreducible else EXIT_NEGATIVE


def cmd_member(args) -> int:
    base = FIELDS_BY_NAME[args.field]
    S = parse_place_set(args.places, base)
    m = parse_poly(args.minpoly, base, "X")
    result = is_totally_S_adic(m, S, precision=args.precision)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": {"command": "member", "field": base.name,
                   "places": [str(v) for v in S],
                   "minpoly": args.minpoly,
                   "precision": args.precision},
        "result": result.to_json(),
    }
    verdict = {True: "member", False: "not a member", None: "undecided"}
    lines = [f"{args.minpoly} over {base.name} at S = {S}:"
             f" {verdict[result.member]}"]
    for e in result.evidence:
        lines.append(f"  {e.place}: {e.method} -> {e.splits}")
    _emit(args, payload, lines)
    if result.member is True:
        return EXIT_OK
    if result.member is False:
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED


def _witness_text(report) -> list:
    base = report.base
    lines = [f"base field {base.name}, S = {{{', '.join(report.config['places'])}}}",
             f"t = {format_element(base, report.t)} (simultaneous uniformizer)",
             f"generic irreducibility: {report.lemma2.verdict}"]
    for s in report.samples:
        y = format_element(base, s.y)
        if not s.gamma.is_defined:
            lines.append(f"  y = {y}: {s.conclusion}")
            continue
        gamma = format_element(base, s.gamma.value)
        splits = ", ".join(f"{e.place}:{'yes' if e.splits else e.splits}"
                           for e in s.splitting)
        irr = (s.irreducible_over_k.irreducible
               if s.irreducible_over_k else "-")
        lines.append(f"  y = {y}: gamma = {gamma}; splits [{splits}];"
                     f" irreducible over {base.name}: {irr};"
                     f" {s.conclusion}")
    lines.append(f"verdict: {report.verdict}")
    return lines


def cmd_witness(args) -> int:
    base = FIELDS_BY_NAME[args.field]
    S = parse_place_set(args.places, base)
    if args.y is not None:
        spec = SampleSpec(explicit=tuple(_parse_y_list(args.y, base)),
                          seed=args.seed)
    else:
        height = args.height
        if height is None:
            height = 50 if base is QQ else 4
        spec = SampleSpec(height=height, count=args.samples, seed=args.seed)
    report = theorem_witness(base, S, spec, precision=args.precision)
    _emit(args, report.to_json(), _witness_text(report))
    return EXIT_OK if report.established else EXIT_NEGATIVE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    handlers = {
        "lemma1": cmd_lemma1,
        "lemma2": cmd_lemma2,
        "member": cmd_member,
        "witness": cmd_witness,
    }
    try:
        return handlers[args.command](args)
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CertificateFailure as exc:
        print(f"certificate failure: {exc}", file=sys.stderr)
        if exc.certificate is not None:
            print(f"  failing certificate: {exc.certificate}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
