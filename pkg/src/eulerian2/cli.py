"""Command-line front end.

Subcommands: ``row``, ``seq``, ``norlund``, ``verify`` and ``enumerate``.
Data goes to stdout and diagnostics to stderr.  Exit status is 0 on success,
1 when ``verify`` finds an unexpected failure and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .eulerian import HARD_ENUMERATION_CAP, descent_histogram, enumerate_stirling_perms, eulerian_row
from .exceptions import DomainError, EnumerationLimitError
from .formats import (
    FORMATS,
    report_to_line,
    reports_to_csv,
    reports_to_json,
    serialize_value,
    values_to_csv,
    write_bfile,
)
from .identities import IDENTITIES, SuiteConfig, run_suite
from .norlund import METHODS, norlund
from .polynomial import format_rational
from .special import bernoulli, cauchy2, harmonic, stirling1_row, stirling2_row

DEFAULT_CLI_CAP = 7

RATIONAL_SEQUENCES = {"bernoulli": bernoulli, "cauchy2": cauchy2, "harmonic": harmonic}
TRIANGLES = {"stirling2": stirling2_row, "stirling1": stirling1_row}


class UsageError(Exception):
    pass


def _emit_flat(values, fmt: str, plain_sep: str, header: bool, offset: int, name: str) -> str:
    if fmt == "plain":
        return plain_sep.join(format_rational(v) for v in values) + "\n"
    if fmt == "csv":
        return values_to_csv([values], [f"{name}({i})" for i in range(offset, offset + len(values))] if header else None)
    if fmt == "json":
        return json.dumps([format_rational(v) for v in values]) + "\n"
    return write_bfile(values, offset)


def cmd_row(args) -> int:
    if args.n < 1:
        raise UsageError(f"row needs n >= 1, got {args.n}")
    sys.stdout.write(_emit_flat(eulerian_row(args.n).entries, args.format, " ", args.header, 1, "C"))
    return 0


def cmd_seq(args) -> int:
    if args.n_max < 0:
        raise UsageError("n_max must be >= 0")
    if args.name in RATIONAL_SEQUENCES:
        if args.format == "bfile":
            raise UsageError(f"{args.name} is a rational sequence; b-files need integers")
        values = [RATIONAL_SEQUENCES[args.name](n) for n in range(args.n_max + 1)]
        sys.stdout.write(_emit_flat(values, args.format, ", ", args.header, 0, args.name))
        return 0
    rows = [TRIANGLES[args.name](n) for n in range(args.n_max + 1)]
    if args.format == "plain":
        out = "".join(", ".join(str(v) for v in row) + "\n" for row in rows)
    elif args.format == "csv":
        out = values_to_csv(rows, ["k=" + str(k) for k in range(args.n_max + 1)] if args.header else None)
    elif args.format == "json":
        out = json.dumps([[str(v) for v in row] for row in rows]) + "\n"
    else:
        # triangles are read by rows, as OEIS does
        out = write_bfile([v for row in rows for v in row], 0)
    sys.stdout.write(out)
    return 0


def cmd_norlund(args) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    if args.method == "theorem1" and args.n == 0:
        raise UsageError("method theorem1 needs n >= 1")
    p = norlund(args.n, args.method)
    if args.eval is not None:
        try:
            z = Fraction(args.eval)
        except ValueError:
            raise UsageError(f"cannot parse evaluation point {args.eval!r}") from None
        value = p(z)
        if args.format == "json":
            sys.stdout.write(json.dumps(format_rational(value)) + "\n")
        elif args.format == "bfile":
            raise UsageError("b-file output needs an integer sequence")
        else:
            sys.stdout.write(format_rational(value) + "\n")
        return 0
    coeffs = list(p.poly.coeffs) or [Fraction(0)]
    if args.format == "bfile":
        raise UsageError("polynomial coefficients are rational; b-file output is not available")
    sys.stdout.write(_emit_flat(coeffs, args.format, ", ", args.header, 0, "z^"))
    return 0


def cmd_verify(args) -> int:
    if args.all or not args.identity:
        identities = None
    else:
        identities = list(dict.fromkeys(args.identity))
    try:
        config = SuiteConfig(
            n_max=args.n_max,
            enumeration_cap=args.enumeration_cap,
            identities=identities,
            sign_mode=args.sign_mode,
            output_format=args.format,
        )
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    reports = run_suite(config)
    if args.format == "json":
        sys.stdout.write(reports_to_json(reports) + "\n")
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv(reports, args.header))
    else:
        sys.stdout.writelines(report_to_line(r) + "\n" for r in reports)
    unexpected = [r for r in reports if r.unexpected_failure]
    exceptions = sum(not r.expected for r in reports)
    print(
        f"{len(reports)} checks, {len(unexpected)} unexpected failures, {exceptions} documented exceptions",
        file=sys.stderr,
    )
    return 1 if unexpected else 0


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if args.n > args.cap:
        raise UsageError(f"order {args.n} exceeds the enumeration cap {args.cap} (raise it with --cap, max {HARD_ENUMERATION_CAP})")
    if args.histogram:
        hist = descent_histogram(args.n, args.cap)
        row = eulerian_row(args.n)
        cells = " ".join(f"k={k}:{c}" for k, c in enumerate(hist, start=1))
        verdict = "MATCH" if tuple(hist) == tuple(row) else "MISMATCH"
        print(f"{cells} (recurrence: {' '.join(map(str, row))}) {verdict}")
        return 0 if verdict == "MATCH" else 1
    sep = "" if args.n < 10 else " "
    out = sys.stdout
    for word in enumerate_stirling_perms(args.n, args.cap):
        out.write(sep.join(map(str, word)) + "\n")
    return 0


def _cap(text: str) -> int:
    value = int(text)
    if not 1 <= value <= HARD_ENUMERATION_CAP:
        raise argparse.ArgumentTypeError(f"cap must lie in 1..{HARD_ENUMERATION_CAP}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerian2",
        description="Second-order Eulerian numbers, Nörlund polynomials and exact identity checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def formats(p, choices=FORMATS):
        p.add_argument("--format", choices=choices, default="plain")
        p.add_argument("--header", action="store_true", help="add a header line to CSV output")

    p = sub.add_parser("row", help="row n of the second-order Eulerian triangle")
    p.add_argument("n", type=int)
    formats(p)
    p.set_defaults(func=cmd_row)

    p = sub.add_parser("seq", help="terms 0..n_max of a number family")
    p.add_argument("name", choices=sorted([*RATIONAL_SEQUENCES, *TRIANGLES]))
    p.add_argument("n_max", type=int)
    formats(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("norlund", help="the Nörlund polynomial B_n^(z), ascending coefficients")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=sorted(METHODS), default="egf")
    p.add_argument("--eval", metavar="Z", help="evaluate at a rational point such as 3 or -1/2")
    formats(p)
    p.set_defaults(func=cmd_norlund)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--all", action="store_true", help="run every default identity (the default)")
    p.add_argument("--identity", action="append", choices=list(IDENTITIES), metavar="NAME",
                   help=f"restrict to an identity; repeatable. One of: {', '.join(IDENTITIES)}")
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--enumeration-cap", type=_cap, default=DEFAULT_CLI_CAP)
    p.add_argument("--sign-mode", choices=["corrected", "as-printed", "as_printed"], default="corrected")
    formats(p, ("plain", "csv", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list Stirling permutations of order n")
    p.add_argument("n", type=int)
    p.add_argument("--histogram", action="store_true", help="print the descent histogram instead")
    p.add_argument("--cap", type=_cap, default=DEFAULT_CLI_CAP)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, EnumerationLimitError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
