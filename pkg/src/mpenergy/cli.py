"""Command-line entry point.

    mpenergy energy 1,3,1
    mpenergy compare 1,2,2 --locus 0,1
    mpenergy sweep --nmax 12 --format csv --out sweep.csv
    mpenergy verify lemma4.3 --trials 500 --seed 42

Exit codes: 0 pass, 1 verification or numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import math
import sys
from typing import Sequence

from .graphs import EdgeLocus, PartitionSpec, build_complete_multipartite, multipartite_quotient
from .oracle import (
    SIGN_TOL,
    SUBSWEEPS,
    SWEEP_NMAX,
    TRIPARTITE_NMAX,
    EnergyComparison,
    SweepReport,
    observe_sign,
    run_cases,
    sweep_theorem,
    sweep_tripartite,
)
from .poly import largest_real_root, tripartite_g
from .spectra import EigenSolveError, eig_quotient, eig_symmetric
from .suites import DEFAULT_SEED, SUITES, SuiteResult

CSV_HEADER = ["spec", "locus", "energy_g", "energy_ge", "delta", "predicted", "observed", "margin"]
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parts(text: str) -> list[int]:
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed part list {text!r}") from None
    if len(parts) < 2:
        raise UsageError("a complete multipartite graph needs at least 2 parts")
    if any(p < 1 for p in parts):
        raise UsageError("part sizes must be positive")
    return parts


def _locus(parts: list[int], spec: PartitionSpec, text: str) -> EdgeLocus:
    """Locus given as 0-based positions in the part list as typed."""
    try:
        a, b = (int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"malformed locus {text!r}; expected a,b") from None
    if a == b:
        raise UsageError("locus must join two different parts")
    if not (0 <= a < len(parts) and 0 <= b < len(parts)):
        raise UsageError(f"locus index out of range for {len(parts)} parts")
    return EdgeLocus.between_sizes(spec, parts[a], parts[b])


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def render_rows(rows: list[EnergyComparison], fmt: str, summary: dict | None = None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in rows:
            d = r.row()
            w.writerow([d["spec"], d["locus"], _fmt12(d["energy_g"]), _fmt12(d["energy_ge"]),
                        _fmt12(d["delta"]), d["predicted"], d["observed"], _fmt12(d["margin"])])
        return buf.getvalue()
    if fmt == "json":
        payload = {"rows": [r.row() for r in rows]}
        if summary is not None:
            payload["summary"] = summary
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"{'spec':<24} {'locus':<6} {'E(G)':>14} {'E(G-e)':>14} {'delta':>12} "
             f"{'predicted':<9} {'observed':<12}"]
    for r in rows:
        lines.append(f"{str(r.spec):<24} {str(r.locus):<6} {r.energy_g:>14.9f} "
                     f"{r.energy_g_minus_e:>14.9f} {r.delta:>12.3e} "
                     f"{r.predicted.value:<9} {r.observed.value:<12}")
    if summary is not None:
        lines.append(" ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines) + "\n"


def cmd_energy(args) -> int:
    spec = PartitionSpec(_parts(args.spec))
    g = build_complete_multipartite(spec)
    values = eig_symmetric(g).values
    energy = sum(abs(x) for x in values)
    quotient_route = 2 * eig_quotient(multipartite_quotient(spec)).values[0]
    out = [
        f"spec = {spec}",
        f"E = {energy:.9f}",
        f"lambda_1 = {values[0]:.9f}",
        f"lambda_2 = {values[1]:.9f}",
        f"E via quotient (2 lambda_1) = {quotient_route:.9f}",
        f"difference = {abs(energy - quotient_route):.3e}",
    ]
    if spec.k == 3 and 1 in spec.parts:
        rest = list(spec.parts)
        rest.remove(1)
        i, t = rest
        tau = largest_real_root(tripartite_g(i, t))
        out.append(f"tau(g) for K_(1,{i},{t}) = {tau:.9f}")
        out.append(f"difference = {abs(energy - tau):.3e}")
    print("\n".join(out))
    return EXIT_OK


def cmd_compare(args) -> int:
    parts = _parts(args.spec)
    spec = PartitionSpec(parts)
    locus = _locus(parts, spec, args.locus)
    row = observe_sign(spec, locus, args.sign_tol)
    _write(render_rows([row], args.format), args.out)
    return EXIT_OK if row.agrees else EXIT_FAIL


def cmd_sweep(args) -> int:
    if args.subsweep:
        report = run_cases(SUBSWEEPS[args.subsweep](), args.sign_tol, args.workers)
    elif args.tripartite_only:
        if not 3 <= args.nmax <= TRIPARTITE_NMAX:
            raise UsageError(f"--nmax must lie in [3, {TRIPARTITE_NMAX}] with --tripartite-only")
        report = sweep_tripartite(args.nmax, args.sign_tol, args.workers)
    else:
        if not 3 <= args.nmax <= SWEEP_NMAX:
            raise UsageError(f"--nmax must lie in [3, {SWEEP_NMAX}]")
        report = sweep_theorem(args.nmax, args.sign_tol, args.workers)
    _write(render_rows(report.rows, args.format,
                       report.summary if args.format != "csv" else None), args.out)
    if args.format == "csv" and args.out:
        print(" ".join(f"{k}={v}" for k, v in report.summary.items()))
    return EXIT_OK if report.passed else EXIT_FAIL


def _suite_kwargs(fn, args) -> dict:
    accepted = inspect.signature(fn).parameters
    kwargs = {}
    for flag, name in (("trials", "trials"), ("seed", "seed"), ("nmax", "n_max"), ("tol", "tol")):
        value = getattr(args, flag)
        if value is not None and name in accepted:
            kwargs[name] = value
    return kwargs


def render_suite(res: SuiteResult, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "suite": res.name,
            "passed": res.passed,
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in res.checks],
            "stats": res.stats,
        }
        return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    lines = [f"FAIL {c.label} {c.detail}".rstrip() for c in res.failures]
    status = "PASS" if res.passed else "FAIL"
    lines.append(f"{status} {res.name}: {len(res.checks) - len(res.failures)}/{len(res.checks)} checks")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    if args.lemma not in SUITES:
        raise UsageError(f"unknown lemma {args.lemma!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[args.lemma]
    res = fn(**_suite_kwargs(fn, args))
    _write(render_suite(res, args.format), args.out)
    return EXIT_OK if res.passed else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_float(text: str) -> float:
    v = float(text)
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mpenergy", description="Energy change of complete multipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_default="table"):
        p.add_argument("--format", choices=["csv", "json", "table"], default=fmt_default)
        p.add_argument("--out", default=None, help="write output to PATH")

    p = sub.add_parser("energy", help="energy of K_{spec} by two routes")
    p.add_argument("spec", help="comma-separated part sizes, e.g. 1,3,1")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("compare", help="predicted vs observed energy change for one edge")
    p.add_argument("spec")
    p.add_argument("--locus", required=True, help="a,b: 0-based positions in the part list")
    p.add_argument("--sign-tol", type=_positive_float, default=SIGN_TOL)
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="exhaustive check of the classification")
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--sign-tol", type=_positive_float, default=SIGN_TOL)
    p.add_argument("--tol", type=_positive_float, default=None, help="alias of --sign-tol")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--tripartite-only", action="store_true")
    p.add_argument("--subsweep", choices=sorted(SUBSWEEPS), default=None,
                   help="replay one residual case set")
    common(p, "csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("lemma", help=f"one of: {', '.join(SUITES)}")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help=f"default {DEFAULT_SEED}")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--tol", type=_positive_float, default=None)
    common(p, "table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "tol", None) is not None and hasattr(args, "sign_tol") and args.command == "sweep":
            args.sign_tol = args.tol
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EigenSolveError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
