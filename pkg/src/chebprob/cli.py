"""Command-line front end.

Three subcommands wrap the library:

* ``probnums``   -- tables of the probability numbers, optionally
  cross-validated across all three computation methods.
* ``identity``   -- reconstruction of an Euler polynomial value from the
  weighted generalized-polynomial series.
* ``montecarlo`` -- seeded statistical checks (rep | gen | klebanov |
  integral).

Exit codes are a stable contract: 0 success, 1 check failure, 2 usage error.
Every JSON document carries a ``schema_version`` field and is emitted with
sorted keys, so identical flags and seed produce byte-identical output.
Rational inputs are written "a/b" or as integer literals; decimal literals
are rejected rather than silently rounded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import identities, probnum, stochastic
from .exactnum import format_rational

SCHEMA_VERSION = 1
DEFAULT_SEED = 12345
SEED_ENV_VAR = "CHEBPROB_SEED"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad flag combination or precondition violation: exit code 2."""


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or an integer literal; reject anything else (notably
    decimals, which would lose exactness)."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational {text!r}: {exc}") from exc
    raise UsageError(f"invalid rational {text!r}: expected 'a' or 'a/b'")


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)  # RFC-4180 line endings
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(document: dict) -> str:
    document = {"schema_version": SCHEMA_VERSION, **document}
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def cmd_probnums(args: argparse.Namespace) -> int:
    if args.N < 1:
        raise UsageError(f"--N must be >= 1, got {args.N}")
    if args.max_ell < args.N:
        raise UsageError(f"--max-ell must be >= N, got {args.max_ell} < {args.N}")

    report = None
    if args.method == "all":
        try:
            report = probnum.cross_validate(args.N, args.max_ell, args.tol)
        except probnum.CrossValidationError as exc:
            print(f"cross-validation failed: {exc}", file=sys.stderr)
            return EXIT_CHECK_FAILED
        table = probnum.probnum_series(args.N, args.max_ell)
    elif args.method == "series":
        table = probnum.probnum_series(args.N, args.max_ell)
    elif args.method == "trig":
        table = probnum.probnum_trig(args.N, args.max_ell)
    else:
        table = probnum.catalan_table(args.N, args.max_ell)

    if args.format == "csv":
        _write(_csv_text(table.csv_rows()), args.out)
        if report is not None:
            print(
                f"max trig deviation: {report.max_trig_deviation:.6e}",
                file=sys.stderr,
            )
    elif args.format == "json":
        document = table.json_dict()
        if report is not None:
            document["cross_validation"] = report.json_dict()
        _write(_json_text(document), args.out)
    else:
        lines = [f"probability numbers  N={table.N}  method={table.method}"]
        for ell, exact, value in table.rows():
            exact_text = exact if exact is not None else "-"
            lines.append(f"  ell={ell:<4d} exact={exact_text:<24s} float={value:.12g}")
        lines.append(f"  tail bound beyond ell={table.max_ell}: {table.tail_bound:.6e}")
        if report is not None:
            lines.append(f"  max trig deviation: {report.max_trig_deviation:.6e}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_identity(args: argparse.Namespace) -> int:
    if args.N < 1:
        raise UsageError(f"--N must be >= 1, got {args.N}")
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    if args.tol <= 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    x = parse_rational(args.x)
    try:
        result = identities.reconstruct_euler(
            args.n, args.N, x, args.tol, max_k=args.max_terms
        )
    except identities.ConvergenceError as exc:
        print(f"identity check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    if args.format == "json":
        document = result.json_dict()
        document["tol"] = args.tol
        document["converged"] = True
        _write(_json_text(document), args.out)
    else:
        lines = [
            f"reconstruction of E_{result.n}(x) at x={format_rational(result.x)} "
            f"with N={result.N}",
            f"  terms used        : {result.terms_used}",
            f"  partial value     : {format_rational(result.partial_value)}"
            f" ({float(result.partial_value):.12g})",
            f"  target            : {format_rational(result.target)}"
            f" ({float(result.target):.12g})",
            f"  abs error         : {result.abs_error:.6e} (tol {args.tol:.1e})",
            f"  tail estimate     : {result.tail_estimate:.6e}",
            f"  first small term  : {result.first_small_term_k}",
        ]
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _montecarlo_report(args: argparse.Namespace) -> tuple[stochastic.MomentReport, dict]:
    stream = stochastic.RandomStream(args.seed)
    if args.kind == "rep":
        x = parse_rational(args.x)
        report = stochastic.mc_euler_poly(stream, args.n, x, args.samples)
        params = {"n": args.n, "x": format_rational(x)}
    elif args.kind == "gen":
        x = parse_rational(args.x)
        report = stochastic.mc_gen_euler(stream, args.n, args.p, x, args.samples)
        params = {"n": args.n, "p": args.p, "x": format_rational(x)}
    else:
        report = stochastic.mc_klebanov(stream, args.N, args.samples)
        params = {"N": args.N}
    return report, params


def cmd_montecarlo(args: argparse.Namespace) -> int:
    if args.kind == "integral":
        if args.k < 0:
            raise UsageError(f"--k must be >= 0, got {args.k}")
        deviation = stochastic.moment_integral_check(args.k)
        # Odd moments vanish identically; hold the quadrature to 1e-12 there.
        tolerance = 1e-12 if args.k % 2 else args.quad_tol
        passed = deviation <= tolerance
        if args.format == "json":
            document = {
                "kind": "integral",
                "k": args.k,
                "deviation": deviation,
                "tolerance": tolerance,
                "passed": passed,
            }
            _write(_json_text(document), args.out)
        else:
            _write(
                f"moment integral k={args.k}: deviation {deviation:.3e} "
                f"(tolerance {tolerance:.1e}) -> {'ok' if passed else 'FAIL'}\n",
                args.out,
            )
        return EXIT_OK if passed else EXIT_CHECK_FAILED

    if args.samples < 10**4:
        raise UsageError(f"--samples must be >= 10000, got {args.samples}")
    if args.kind in ("rep", "gen") and args.x is None:
        raise UsageError(f"--x is required for kind {args.kind!r}")
    if args.kind == "klebanov" and args.N < 2:
        raise UsageError(f"--N must be >= 2, got {args.N}")

    report, params = _montecarlo_report(args)
    passed = report.ok(band=args.band)
    if args.format == "json":
        document = {
            "kind": args.kind,
            "params": params,
            "seed": args.seed,
            "band": args.band,
            "passed": passed,
            **report.json_dict(),
        }
        _write(_json_text(document), args.out)
    else:
        lines = [
            f"monte carlo {args.kind}  params={params}  samples={report.sample_size}"
            f"  seed={args.seed}"
        ]
        for entry in report.entries:
            lines.append(
                f"  {entry.label:<8s} estimate={entry.estimate: .8f}"
                f"  reference={entry.reference: .8f}"
                f"  SE={entry.std_error:.3e}  deviation={entry.standardized:.2f} SE"
            )
        for key, value in report.extras.items():
            lines.append(f"  {key}: {value:.6g}")
        lines.append(f"  band: {args.band} SE -> {'ok' if passed else 'FAIL'}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebprob",
        description=(
            "Probability numbers of reciprocal Chebyshev series, Euler "
            "polynomial identities, and seeded Monte Carlo checks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tab = sub.add_parser("probnums", help="emit a probability-number table")
    p_tab.add_argument("--N", type=int, required=True)
    p_tab.add_argument("--max-ell", dest="max_ell", type=int, required=True)
    p_tab.add_argument(
        "--method",
        choices=["series", "trig", "catalan", "all"],
        default="series",
        help="computation method; 'all' cross-validates the three",
    )
    p_tab.add_argument("--tol", type=float, default=1e-10,
                       help="series-vs-trig tolerance for --method all")
    p_tab.add_argument("--format", choices=["csv", "json", "pretty"], default="pretty")
    p_tab.add_argument("--out", default=None, help="write output to a file")
    p_tab.set_defaults(handler=cmd_probnums)

    p_id = sub.add_parser("identity", help="reconstruct E_n(x) from the weighted series")
    p_id.add_argument("--n", type=int, required=True)
    p_id.add_argument("--N", type=int, required=True)
    p_id.add_argument("--x", required=True, help="rational, e.g. 1/4 or -2/3 or 5")
    p_id.add_argument("--tol", type=float, default=1e-9)
    p_id.add_argument("--max-terms", dest="max_terms", type=int,
                      default=identities.DEFAULT_MAX_K,
                      help="index budget for the series")
    p_id.add_argument("--format", choices=["json", "pretty"], default="pretty")
    p_id.add_argument("--out", default=None)
    p_id.set_defaults(handler=cmd_identity)

    p_mc = sub.add_parser("montecarlo", help="seeded statistical checks")
    p_mc.add_argument("kind", choices=["rep", "gen", "klebanov", "integral"])
    p_mc.add_argument("--n", type=int, default=1)
    p_mc.add_argument("--p", type=int, default=1)
    p_mc.add_argument("--N", type=int, default=2)
    p_mc.add_argument("--x", default=None, help="rational evaluation point")
    p_mc.add_argument("--k", type=int, default=0, help="moment order for 'integral'")
    p_mc.add_argument("--samples", type=int, default=10**5)
    p_mc.add_argument("--seed", type=int, default=None)
    p_mc.add_argument("--band", type=float, default=stochastic.DEFAULT_BAND,
                      help="acceptance band in standard errors")
    p_mc.add_argument("--quad-tol", dest="quad_tol", type=float, default=1e-10)
    p_mc.add_argument("--format", choices=["json", "pretty"], default="pretty")
    p_mc.add_argument("--out", default=None)
    p_mc.set_defaults(handler=cmd_montecarlo)

    return parser


def _merge_rational_flags(argv: list[str]) -> list[str]:
    # Rational values may start with '-'; join them to their flag so that
    # argparse does not mistake "-2/3" for an option.
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] == "--x" and i + 1 < len(argv):
            merged.append(f"--x={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_rational_flags(list(argv)))
    if getattr(args, "seed", None) is None and args.command == "montecarlo":
        args.seed = _default_seed()
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
