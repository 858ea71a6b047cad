"""Command-line interface: ``certify``, ``sweep``, ``bounds`` and ``supnorm``.

Exit codes: 0 success, 2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .bounds import bound_table, check_ordering
from .certificate import MAX_WINDOW, CertificateParams, evaluate_certificate, sweep
from .core import AnnulusParams, LaurentPolynomial
from .errors import InvariantViolation
from .supnorm import sup_norm_sampled

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit(text: str, out: str = "-") -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_certify(args) -> int:
    params = CertificateParams(args.n, args.m, AnnulusParams(args.R))
    result = evaluate_certificate(params, max_window=args.max_window)
    _emit(report.render([report.certificate_row(result)], report.CERTIFICATE_COLUMNS, args.format, single=True))
    return EXIT_OK


def cmd_sweep(args) -> int:
    Rs = report.parse_real_spec(args.R)
    ns = report.parse_int_spec(args.n)
    ms = report.parse_int_spec(args.m)
    results = sweep(ns, ms, Rs, max_window=args.max_window)
    rows = [report.certificate_row(r) for r in results]
    _emit(report.render(rows, report.CERTIFICATE_COLUMNS, args.format), args.out)
    if any(r.ok for r in results):
        return EXIT_OK
    if any(r.error.startswith(InvariantViolation.__name__) for r in results):
        return EXIT_INTERNAL
    return EXIT_USAGE


def cmd_bounds(args) -> int:
    a = AnnulusParams(args.R)
    if not args.gamma_tol > 0:
        raise ValueError("gamma tolerance must be positive")
    table = bound_table(a, args.gamma_tol)
    rows = report.bound_rows(a.R, table, check_ordering(table))
    _emit(report.render(rows, report.BOUND_COLUMNS, args.format))
    return EXIT_OK


def cmd_supnorm(args) -> int:
    a = AnnulusParams(args.R)
    p = LaurentPolynomial(report.parse_coeff_spec(args.coeffs))
    result = sup_norm_sampled(p, a, args.samples)
    _emit(report.render([report.supnorm_row(a.R, result)], report.SUPNORM_COLUMNS, args.format, single=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annulus-k",
        description="Witness lower bounds and literature bounds for the annulus spectral constant K(R).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="evaluate one witness certificate")
    p.add_argument("--R", type=float, required=True, help="annulus radius, R > 1")
    p.add_argument("--n", type=int, required=True, help="test-function degree, n >= 2")
    p.add_argument("--m", type=int, required=True, help="witness size, m >= 3")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--max-window", type=int, default=MAX_WINDOW)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="evaluate certificates over a parameter grid")
    p.add_argument("--R", required=True, help="reals: lo:hi:step and/or comma list")
    p.add_argument("--n", required=True, help="integers: lo..hi and/or comma list")
    p.add_argument("--m", required=True, help="integers: lo..hi and/or comma list")
    p.add_argument("--out", default="-", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--max-window", type=int, default=MAX_WINDOW)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="tabulate the closed-form bounds at R")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--gamma-tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("supnorm", help="sampled sup norm of a Laurent polynomial on the annulus")
    p.add_argument("--coeffs", required=True, help="degree:value pairs, e.g. -2:0.25,2:0.25")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--samples", type=int, default=4096, help="even, >= 16")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.set_defaults(func=cmd_supnorm)
    return parser


def _glue_dash_values(argv: list[str]) -> list[str]:
    # "--coeffs -2:0.25" would otherwise be read as an unknown option
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--coeffs", "--R") and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1] != "-":
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_dash_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
