"""Invariant suites behind ``epiihs verify``.

Each suite returns a list of :class:`~epiihs.report.Check` carrying the
measured discrepancy and the tolerance it was held to.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional

from .exact import (
    HarmonicSpec,
    brute_force_sum,
    harmonic_sum_exact,
    partition_sum,
    partition_weight_sum,
    qseries_coefficient,
)
from .quadrature import mc_harmonic_infinite, multibeta_check, quad_m2
from .report import Check, check_le
from .series import (
    genfunc_coeffs_finite,
    genfunc_coeffs_infinite,
    homogeneous_from_power_sums,
    power_sums,
    tail_bound,
)
from .special import (
    beta,
    beta_limit,
    finite_product,
    gamma_complex,
    gamma_product,
    multibeta,
    roots_of_unity,
    zeta_ref,
)

SQRT_PI = 1.7724538509055160273
ZETA2 = 1.6449340668482264365
ZETA3 = 1.2020569031595942854
ZETA4 = 1.0823232337111381915
S_2_2 = 1.8940656589944918352  # 7 pi^4 / 360

GAMMA_RTOL = 1e-12

SUITES = ("exact", "series", "gamma", "integral")


def exact_suite() -> list[Check]:
    checks = []
    for a in (1, 2, 3):
        for k in range(5):
            worst = Fraction(0)
            for N in range(1, 9):
                spec = HarmonicSpec(a, k, N)
                r = harmonic_sum_exact(spec)
                worst = max(worst, abs(brute_force_sum(spec) - r), abs(partition_sum(spec) - r))
            checks.append(check_le(f"three-way equality a={a} k={k} N<=8", worst, Fraction(0)))
    for a in (1, 2):
        for t in (Fraction(1), Fraction(1, 2), Fraction(2, 3)):
            worst = Fraction(0)
            for N in range(1, 6):
                for M in range(13):
                    worst = max(worst, abs(qseries_coefficient(N, M, t, a) - partition_weight_sum(N, M, t, a)))
            checks.append(check_le(f"q-product identity a={a} t={t} N<=5 M<=12", worst, Fraction(0)))
    for a in (1, 2, 3):
        for k in range(5):
            vals = [harmonic_sum_exact(HarmonicSpec(a, k, N)) for N in range(1, 9)]
            drops = sum(1 for x, y in zip(vals, vals[1:]) if y < x)
            checks.append(Check(f"monotone in N, S(1)=1, a={a} k={k}", drops == 0 and vals[0] == 1, drops, 0))
    return checks


def series_suite() -> list[Check]:
    checks = []
    for a in (1, 2, 3):
        worst = Fraction(0)
        for N in range(1, 11):
            coeffs = genfunc_coeffs_finite(a, N, 8).coeffs
            for k in range(9):
                worst = max(worst, abs(coeffs[k] - harmonic_sum_exact(HarmonicSpec(a, k, N))))
        checks.append(check_le(f"generating-function coefficients a={a} N<=10 K=8", worst, Fraction(0)))
    for a, N in ((1, 3), (2, 5), (3, 10)):
        p = power_sums(a, N, 8)
        exact = homogeneous_from_power_sums(p, 8)
        approx = homogeneous_from_power_sums([float(x) for x in p], 8)
        rel = max(abs(float(e) - f) / float(e) for e, f in zip(exact, approx))
        checks.append(check_le(f"float vs exact Newton identities a={a} N={N}", rel, 1e-12))
    inf = {m: genfunc_coeffs_infinite(m, 2) for m in (2, 3, 4)}
    for m, ref in ((2, ZETA2), (3, ZETA3), (4, ZETA4)):
        checks.append(check_le(f"S_{{{m}_1}}(inf) = zeta({m})", abs(inf[m][1] - ref) / ref, 1e-15))
    checks.append(check_le("S_{2_2}(inf) = 7 pi^4/360", abs(inf[2][2] - S_2_2) / S_2_2, 1e-12))
    p1 = math.fsum(1.0 / (n * n) for n in range(1, 10_001))
    checks.append(check_le("S_{2_1}(10^4) gap to pi^2/6", ZETA2 - p1, 1.1e-4))
    return checks


def gamma_suite() -> list[Check]:
    checks = []
    worst = 0.0
    for i in range(1, 10):
        t = i / 10
        ref = math.pi * t / math.sin(math.pi * t)
        worst = max(worst, abs(gamma_product(2, t) - ref) / ref)
    checks.append(check_le("reflection oracle gamma_product(2,t), t=0.1..0.9", worst, 1e-12))
    K = 32
    for m in (2, 3, 4):
        series = genfunc_coeffs_infinite(m, K)
        for t in (0.2, 0.5, 0.8):
            gap = abs(gamma_product(m, t).real - series.evaluate(t))
            checks.append(check_le(f"gamma product vs series m={m} t={t}", gap, tail_bound(m, t, K) + 1e-10))
    worst = 0.0
    for N in range(1, 51):
        for i in range(1, 10):
            t = i / 10
            fp = finite_product(1, N, t)
            worst = max(worst, abs(N * beta(N, 1 - t) - fp) / fp)
    checks.append(check_le("N B(N, 1-t) = finite product, N<=50", worst, 1e-11))
    for m in (2, 3):
        for t in (0.3, 0.6, 0.9):
            limit = gamma_product(m, t).real
            prods = [finite_product(m, N, t) for N in (1, 10, 100, 1000)]
            ok = all(x < y for x, y in zip(prods, prods[1:])) and prods[-1] <= limit
            checks.append(Check(f"finite product increases to gamma product m={m} t={t}", ok, limit - prods[-1], limit))
    errs = [abs(beta_limit(0.5, N) - SQRT_PI) for N in (10, 100, 1000, 10_000)]
    mono = all(y < x for x, y in zip(errs, errs[1:]))
    checks.append(Check("N^(1/2) B(N,1/2) -> sqrt(pi) monotone", mono, errs[-1], 1e-4))
    checks.append(check_le("N^(1/2) B(N,1/2) - sqrt(pi) at N=10^4", errs[-1], 1e-4))
    worst = max(abs(sum(roots_of_unity(m).values)) for m in range(2, 65))
    checks.append(check_le("roots of unity sum to zero, m<=64", worst, 1e-14))
    worst = 0.0
    for z in (0.3 + 1.1j, -2.4 + 0.7j, 4.5 - 1.9j, 1 + 1j):
        g, gc = gamma_complex(z), gamma_complex(z.conjugate())
        worst = max(worst, abs(gc - g.conjugate()) / abs(g))
    checks.append(check_le("gamma conjugate symmetry", worst, 1e-15))
    return checks


def integral_suite(seed: int = 42, workers: Optional[int] = None) -> list[Check]:
    checks = []
    oracle = genfunc_coeffs_infinite(2, 5)
    for k in range(6):
        checks.append(check_le(f"quad_m2 k={k} vs series", abs(quad_m2(k) - oracle[k]), 1e-10))
    runs = ((2, 1, 10**6, ZETA2), (3, 1, 10**7, ZETA3), (4, 1, 10**7, ZETA4), (2, 2, 10**6, S_2_2))
    for m, k, n, ref in runs:
        est = mc_harmonic_infinite(m, k, n, seed, workers=workers)
        checks.append(check_le(f"MC S_{{{m}_{k}}}(inf) n={n}", abs(est.mean.real - ref), 4 * est.stderr))
        checks.append(check_le(f"MC imaginary part m={m} k={k}", abs(est.mean.imag), 4 * est.stderr_im))
        if m == 2:
            checks.append(
                check_le(f"MC vs quadrature m=2 k={k}", abs(est.mean.real - quad_m2(k)), 4 * est.stderr + 1e-10)
            )
    for alphas in ((1.0, 1.0, 1.0), (2.0, 3.0), (2.0, 2.0, 2.0)):
        est = multibeta_check(alphas, 10**6, seed, workers=workers)
        ref = multibeta(alphas).real
        # the gamma ratio itself carries ~1e-15 relative rounding
        tol = 4 * est.stderr + GAMMA_RTOL * abs(ref)
        checks.append(check_le(f"multiple beta {alphas}", abs(est.mean.real - ref), tol))
    return checks


def run_suite(name: str, seed: int = 42) -> list[Check]:
    table: dict[str, Callable[[], list[Check]]] = {
        "exact": exact_suite,
        "series": series_suite,
        "gamma": gamma_suite,
        "integral": lambda: integral_suite(seed),
    }
    if name == "all":
        return [c for s in SUITES for c in table[s]()]
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return table[name]()
