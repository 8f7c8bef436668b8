"""Command-line front end.

Commands: ``measure``, ``expect``, ``maxexpect``, ``sample``, ``corpus``.

Exit codes: 0 success, 1 corpus mismatch, 2 parse/validation error,
3 unsupported input, 4 numeric error.
"""

from __future__ import annotations

import argparse
import sys
import time
import warnings

from . import __version__
from .corpus import BUILTIN_CORPUS, corpus_verify, load_corpus
from .errors import (
    InvalidStateError,
    NormalizationWarning,
    NumericError,
    SiteIndexError,
    StateParseError,
    UnsupportedStateError,
)
from .expectation import expectation_at, max_expectation, sample_measurements
from .measure import entanglement
from .parsing import parse_state
from .report import dumps, to_document
from .spin import Direction

EXIT_OK = 0
EXIT_CORPUS_FAIL = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_NUMERIC = 4

RENORMALIZED = "renormalized-input"


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _g6(x) -> str:
    return f"{x:.6g}"


def _g12(x) -> str:
    return f"{x:.12g}"


def _load(args):
    """Parse the state expression, noting whether it was renormalized."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NormalizationWarning)
        state = parse_state(args.expr, args.dim)
    renormalized = any(issubclass(w.category, NormalizationWarning) for w in caught)
    return state, renormalized


def _grid_options(args) -> dict:
    if args.method != "grid":
        return {}
    return {"coarse_steps": args.grid_steps, "refine_rounds": args.refine}


def cmd_measure(args, out):
    state, renormalized = _load(args)
    t0 = time.perf_counter()
    report = entanglement(state, args.method, **_grid_options(args))
    elapsed = time.perf_counter() - t0
    extra = [RENORMALIZED] if renormalized else []
    if args.json:
        out.write(dumps(to_document(args.expr, report, elapsed=elapsed, extra_warnings=extra)) + "\n")
        return EXIT_OK
    rows = [("site", "l", "eigenvalues", "eta", "alpha", "factorable", "max<sigma>", "theta", "phi")]
    for s in report.sites:
        p, mx = s.profile, s.max_expectation
        rows.append((
            str(p.site),
            str(p.l),
            ",".join(str(v) for v in p.distinct_eigenvalues),
            _g6(p.eta),
            "-" if p.alpha is None else _g6(p.alpha),
            "yes" if p.factorable else "no",
            _g6(mx.value),
            "-" if mx.direction is None else _g6(mx.direction.theta),
            "-" if mx.direction is None else _g6(mx.direction.phi),
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out.write(f"input: {args.expr}\n")
    out.write(f"dims: {list(report.dims)}  method: {report.method}\n")
    for r in rows:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    out.write(f"gamma = {_g6(report.gamma)}  lambda_max = {report.lambda_max}  E = {_g6(report.E)}\n")
    all_warnings = list(report.warnings) + extra
    out.write(f"warnings: {', '.join(all_warnings) if all_warnings else 'none'}\n")
    return EXIT_OK


def _direction(args) -> Direction:
    try:
        return Direction(args.theta, args.phi)
    except ValueError as exc:
        raise _Exit(EXIT_PARSE, str(exc)) from exc


def cmd_expect(args, out):
    state, _ = _load(args)
    value = expectation_at(state, args.site, _direction(args))
    if args.json:
        out.write(dumps({"input": args.expr, "site": args.site, "theta": args.theta,
                         "phi": args.phi, "expectation": value}) + "\n")
    else:
        out.write(_g12(value) + "\n")
    return EXIT_OK


def cmd_maxexpect(args, out):
    state, _ = _load(args)
    mx = max_expectation(state, args.site, args.method, **_grid_options(args))
    direction = None if mx.direction is None else {"theta": mx.direction.theta, "phi": mx.direction.phi}
    if args.json:
        out.write(dumps({"input": args.expr, "site": args.site, "method": mx.method,
                         "max_expectation": mx.value, "direction": direction}) + "\n")
    elif direction is None:
        out.write(f"{_g12(mx.value)}  direction: none\n")
    else:
        out.write(f"{_g12(mx.value)}  theta = {_g12(direction['theta'])}  phi = {_g12(direction['phi'])}\n")
    return EXIT_OK


def cmd_sample(args, out):
    state, _ = _load(args)
    if args.shots < 1:
        raise _Exit(EXIT_PARSE, "--shots must be >= 1")
    res = sample_measurements(state, args.site, _direction(args), args.shots, args.seed)
    if args.json:
        out.write(dumps({"input": args.expr, "site": args.site, "theta": args.theta, "phi": args.phi,
                         "shots": res.shots, "seed": args.seed,
                         "counts": {str(k): n for k, n in res.counts.items()},
                         "mean": res.mean}) + "\n")
        return EXIT_OK
    for k, n in res.counts.items():
        out.write(f"{k:+d}: {n}\n")
    out.write(f"mean: {_g12(res.mean)}\n")
    return EXIT_OK


def cmd_corpus(args, out):
    if args.builtin:
        entries = list(BUILTIN_CORPUS)
    elif args.path is None:
        raise _Exit(EXIT_PARSE, "give a corpus file or --builtin")
    else:
        try:
            entries = load_corpus(args.path)
        except OSError as exc:
            raise _Exit(EXIT_PARSE, f"cannot read {args.path}: {exc.strerror}") from exc
        except ValueError as exc:
            raise _Exit(EXIT_PARSE, str(exc)) from exc
    tolerance = args.tolerance
    if tolerance is None:
        tolerance = 1e-9 if args.method == "analytic" else 1e-6
    verdicts = corpus_verify(entries, args.method, tolerance, **_grid_options(args))
    if args.json:
        out.write(dumps([{
            "expr": v.entry.expr, "dim": v.entry.dim, "source": v.entry.source,
            "expected_E": v.entry.expected_E, "computed_E": v.computed, "diff": v.diff,
            "passed": v.passed, "error": v.error,
        } for v in verdicts]) + "\n")
    else:
        rows = [("expr", "expected", "computed", "|diff|", "verdict")]
        for v in verdicts:
            rows.append((
                v.entry.expr,
                _g6(v.entry.expected_E),
                "-" if v.computed is None else _g6(v.computed),
                "-" if v.diff is None else f"{v.diff:.1e}",
                "pass" if v.passed else f"FAIL{'' if v.error is None else ' (' + v.error + ')'}",
            ))
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        for r in rows:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        n_pass = sum(v.passed for v in verdicts)
        out.write(f"{n_pass}/{len(verdicts)} passed\n")
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_CORPUS_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinent",
        description="Entanglement of pure qudit states from maximal spin expectation values.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=None, help="local dimension (default: max digit + 1)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=["analytic", "grid"], default="analytic")
    method.add_argument("--grid-steps", type=int, default=64)
    method.add_argument("--refine", type=int, default=8)

    site = argparse.ArgumentParser(add_help=False)
    site.add_argument("--site", type=int, required=True, help="1-based site index")

    angles = argparse.ArgumentParser(add_help=False)
    angles.add_argument("--theta", type=float, default=0.0, help="polar angle, radians")
    angles.add_argument("--phi", type=float, default=0.0, help="azimuthal angle, radians")

    p = sub.add_parser("measure", parents=[common, method], help="separability index and E")
    p.add_argument("expr")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("expect", parents=[common, site, angles], help="expectation along one direction")
    p.add_argument("expr")
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("maxexpect", parents=[common, method, site], help="maximal expectation on one site")
    p.add_argument("expr")
    p.set_defaults(func=cmd_maxexpect)

    p = sub.add_parser("sample", parents=[common, site, angles], help="simulated measurements")
    p.add_argument("expr")
    p.add_argument("--shots", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("corpus", parents=[method], help="check golden values")
    p.add_argument("path", nargs="?", default=None, help="JSON-lines corpus file")
    p.add_argument("--builtin", action="store_true", help="use the embedded corpus")
    p.add_argument("--json", action="store_true")
    p.add_argument("--tolerance", type=float, default=None,
                   help="allowed |E - expected| (default 1e-9 analytic, 1e-6 grid)")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "method", "analytic") == "grid" and (args.grid_steps < 8 or args.refine < 0):
        err.write("error: --grid-steps must be >= 8 and --refine >= 0\n")
        return EXIT_PARSE
    try:
        return args.func(args, out)
    except _Exit as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except (StateParseError, SiteIndexError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (UnsupportedStateError, InvalidStateError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_UNSUPPORTED
    except NumericError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    except (ArithmeticError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
