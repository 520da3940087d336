"""``epiihs`` command line: sum, genfunc, integrate, verify.

Every invocation writes one JSON report to stdout and a short human summary
to stderr.  Exit codes: 0 success, 1 failed verification, 2 invalid input,
3 enumeration guard tripped.  A report with any failing check exits 1.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Optional, Sequence

from .exact import (
    INFINITY,
    EnumerationTooLarge,
    HarmonicSpec,
    InvalidSpecError,
    brute_force_sum,
    harmonic_sum_exact,
    partition_sum,
)
from .quadrature import Quad1DConfig, QuadratureConfigError, mc_harmonic_infinite, quad_m2
from .report import Check, RunReport, check_le, summary, tagged
from .series import DEFAULT_ORDER, genfunc_coeffs_finite, genfunc_coeffs_infinite, tail_bound
from .special import SpecialFunctionError, finite_product, finite_product_gap_bound, gamma_product
from .verify import run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_GUARD = 3

DEFAULT_SEED = 42
ROUTES = ("product-finite", "gamma", "series")


class UsageError(ValueError):
    pass


def _cutoff(text: str):
    if text == "inf":
        return INFINITY
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"N must be a positive integer or 'inf', got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"N must be a positive integer or 'inf', got {text!r}")
    return n


def _routes(text: str) -> list[str]:
    routes = [r.strip() for r in text.split(",") if r.strip()]
    bad = [r for r in routes if r not in ROUTES]
    if bad or not routes:
        raise argparse.ArgumentTypeError(f"routes must be drawn from {', '.join(ROUTES)}, got {text!r}")
    return routes


# -- commands ---------------------------------------------------------------


def cmd_sum(a: int, k: int, N, method: Optional[str] = None) -> RunReport:
    spec = HarmonicSpec(a, k, N)
    if method is None:
        method = "recurrence" if spec.is_finite else "series"
    inputs = {"a": a, "k": k, "N": "inf" if not spec.is_finite else N, "method": method}
    if not spec.is_finite:
        if method != "series":
            raise UsageError("N=inf requires --method series")
        value = 1.0 if k == 0 else genfunc_coeffs_infinite(a, k)[k]
        return RunReport("sum", inputs, tagged(float(value)))
    fn: dict[str, Callable] = {
        "brute": brute_force_sum,
        "recurrence": harmonic_sum_exact,
        "partition": partition_sum,
        "series": lambda s: genfunc_coeffs_finite(s.a, s.N, s.k)[s.k],
    }
    return RunReport("sum", inputs, tagged(fn[method](spec)))


def cmd_genfunc(m: int, t: float, routes: Sequence[str] = ("gamma",), N: int = 1000, K: int = DEFAULT_ORDER) -> RunReport:
    if m < 2:
        raise UsageError("m must be >= 2")
    if not abs(t) < 1:
        raise UsageError(f"|t| must be < 1, got {t}")
    if N < 1 or K < 0:
        raise UsageError("N must be >= 1 and K >= 0")
    values: dict[str, object] = {}
    for r in routes:
        if r == "product-finite":
            values[r] = finite_product(m, N, t)
        elif r == "gamma":
            values[r] = gamma_product(m, t)
        else:
            values[r] = genfunc_coeffs_infinite(m, K).evaluate(t)

    # error budget of each route relative to the exact infinite product
    budget = {"gamma": 1e-12, "series": tail_bound(m, t, K) + 1e-12}
    if "product-finite" in values:
        limit = abs(gamma_product(m, t))
        budget["product-finite"] = finite_product_gap_bound(m, N, t, limit) + 1e-12
    checks: list[Check] = []
    names = list(values)
    for i, r1 in enumerate(names):
        for r2 in names[i + 1:]:
            delta = abs(complex(values[r1]).real - complex(values[r2]).real)
            checks.append(check_le(f"{r1} vs {r2}", delta, budget[r1] + budget[r2]))
    inputs = {"m": m, "t": t, "routes": names, "N": N, "K": K}
    details = {"routes": {r: tagged(v) for r, v in values.items()}} if len(names) > 1 else {}
    return RunReport("genfunc", inputs, tagged(values[names[0]]), checks, details=details)


def cmd_integrate(
    m: int,
    k: int,
    engine: str = "quad",
    n_samples: int = 10**6,
    seed: int = DEFAULT_SEED,
    U: float = 80.0,
    levels: int = 8,
) -> RunReport:
    if m < 2 or k < 0:
        raise UsageError("need m >= 2 and k >= 0")
    reference = 1.0 if k == 0 else genfunc_coeffs_infinite(m, k)[k]
    if engine == "quad":
        if m != 2:
            raise UsageError("the quadrature engine handles m = 2 only; use --engine mc")
        value = quad_m2(k, Quad1DConfig(U, levels))
        checks = [check_le(f"quadrature vs series S_{{2_{k}}}(inf)", abs(value - reference), 1e-10)]
        inputs = {"m": m, "k": k, "engine": engine, "U": U, "levels": levels}
        return RunReport("integrate", inputs, tagged(value), checks, details={"reference": reference})
    if engine != "mc":
        raise UsageError(f"unknown engine {engine!r}")
    if k < 1:
        raise UsageError("the Monte Carlo engine needs k >= 1")
    if n_samples < 1000:
        raise UsageError("the Monte Carlo engine needs n >= 1000")
    est = mc_harmonic_infinite(m, k, n_samples, seed)
    checks = [
        check_le(f"MC vs series S_{{{m}_{k}}}(inf)", abs(est.mean.real - reference), 4 * est.stderr),
        check_le("MC imaginary part", abs(est.mean.imag), 4 * est.stderr_im),
    ]
    inputs = {"m": m, "k": k, "engine": engine, "n_samples": n_samples}
    return RunReport("integrate", inputs, tagged(est), checks, seed=seed, details={"reference": reference})


def cmd_verify(suite: str = "all", seed: int = DEFAULT_SEED) -> RunReport:
    checks = run_suite(suite, seed)
    return RunReport("verify", {"suite": suite}, summary(checks), checks, seed=seed)


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epiihs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="evaluate S_{a_k}(N)")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-N", type=_cutoff, required=True, help="positive integer or 'inf'")
    p.add_argument("--method", choices=("brute", "recurrence", "partition", "series"))

    p = sub.add_parser("genfunc", help="evaluate the generating function at t")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-t", type=float, required=True)
    p.add_argument("--route", type=_routes, default=["gamma"], help="comma-separated: " + ",".join(ROUTES))
    p.add_argument("-N", type=int, default=1000, help="cutoff for product-finite")
    p.add_argument("-K", type=int, default=DEFAULT_ORDER, help="truncation order for series")

    p = sub.add_parser("integrate", help="evaluate the integral representation")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--engine", choices=("quad", "mc"), default="quad")
    p.add_argument("-n", "--n-samples", dest="n_samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--U", dest="U", type=float, default=80.0)
    p.add_argument("--levels", type=int, default=8)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=("exact", "series", "gamma", "integral", "all"), default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _dispatch(args: argparse.Namespace) -> RunReport:
    if args.command == "sum":
        return cmd_sum(args.a, args.k, args.N, args.method)
    if args.command == "genfunc":
        return cmd_genfunc(args.m, args.t, args.route, args.N, args.K)
    if args.command == "integrate":
        return cmd_integrate(args.m, args.k, args.engine, args.n_samples, args.seed, args.U, args.levels)
    return cmd_verify(args.suite, args.seed)


def _human(report: RunReport) -> str:
    r = report.result
    if r["type"] in ("rational", "float"):
        head = str(r["value"])
    elif r["type"] == "complex":
        head = f"{r['re']!r} {r['im']:+.3e}i"
    elif r["type"] == "estimate":
        head = f"{r['re']!r} +- {r['stderr']:.3e} (im {r['im']:+.3e} +- {r['stderr_im']:.3e})"
    else:
        head = f"{r['passed']} passed, {r['failed']} failed"
    lines = [f"{report.command}: {head}"]
    for c in report.checks:
        if not c.passed or report.command != "verify":
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.measured} <= {c.tolerance}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = _dispatch(args)
    except EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvalidSpecError, UsageError, QuadratureConfigError, SpecialFunctionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report.elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    print(report.to_json())
    print(_human(report), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
