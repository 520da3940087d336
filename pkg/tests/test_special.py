import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epiihs.series import genfunc_coeffs_infinite, tail_bound
from epiihs.special import (
    PoleError,
    beta,
    beta_limit,
    finite_product,
    finite_product_gap_bound,
    gamma_complex,
    gamma_product,
    multibeta,
    roots_of_unity,
    zeta_ref,
)

from oracle_values import GAMMA, GAMMA_PRODUCT, PI_OVER_2, SQRT_PI, ZETA


# -- roots of unity ------------------------------------------------------------


def test_roots_small_cases():
    assert roots_of_unity(2).values == (1, -1)
    assert roots_of_unity(4).values == (1, 1j, -1, -1j)
    r3 = roots_of_unity(3).values
    assert r3[0] == 1
    assert r3[1] == pytest.approx(complex(-0.5, math.sqrt(3) / 2), abs=1e-16)
    assert r3[2] == r3[1].conjugate()


@pytest.mark.parametrize("m", range(2, 65))
def test_roots_invariants(m):
    vals = roots_of_unity(m).values
    assert len(vals) == m
    assert all(abs(abs(v) - 1) <= 1e-15 for v in vals)
    assert abs(sum(vals)) <= 1e-14
    assert all(vals[m - j] == vals[j].conjugate() for j in range(1, m))
    for j, v in enumerate(vals):
        assert abs(v - cmath.exp(2j * math.pi * j / m)) < 2e-15


def test_roots_reject_small_m():
    with pytest.raises(ValueError):
        roots_of_unity(1)


# -- gamma -----------------------------------------------------------------


@pytest.mark.parametrize("z", sorted(GAMMA, key=lambda z: (z.real, z.imag)))
def test_gamma_frozen_values(z):
    g = gamma_complex(z)
    assert abs(g - GAMMA[z]) <= 1e-13 * abs(GAMMA[z])


def test_gamma_examples():
    assert gamma_complex(1) == pytest.approx(1, rel=1e-15)
    assert gamma_complex(0.5) == pytest.approx(SQRT_PI, rel=1e-14)
    g = gamma_complex(1 + 1j)
    assert g.real == pytest.approx(0.4980156681, abs=1e-10)
    assert g.imag == pytest.approx(-0.1549498283, abs=1e-10)


def _away_from_poles(z):
    return not (z.real <= 0.5 and abs(z.imag) < 0.05 and abs(z.real - round(z.real)) < 0.05)


@settings(max_examples=300, deadline=None)
@given(st.floats(-3, 5), st.floats(-2, 2))
def test_gamma_against_mpmath(re, im):
    z = complex(re, im)
    if not _away_from_poles(z):
        return
    ref = complex(mpmath.gamma(mpmath.mpc(re, im)))
    assert abs(gamma_complex(z) - ref) <= 1e-12 * abs(ref)


@settings(max_examples=100, deadline=None)
@given(st.floats(-3, 5), st.floats(-2, 2))
def test_gamma_conjugate_symmetry(re, im):
    z = complex(re, im)
    if not _away_from_poles(z):
        return
    g = gamma_complex(z)
    assert abs(gamma_complex(z.conjugate()) - g.conjugate()) <= 4e-16 * abs(g)


@pytest.mark.parametrize("z", [0, -1, -2, -3, complex(-2, 1e-13), -1 + 5e-13])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        gamma_complex(z)


def test_gamma_near_pole_is_finite():
    z = -2 + 1e-6
    ref = float(mpmath.gamma(mpmath.mpf(z)))
    assert gamma_complex(z).real == pytest.approx(ref, rel=1e-9)


# -- products ---------------------------------------------------------------


@pytest.mark.parametrize("t", [i / 10 for i in range(1, 10)])
def test_gamma_product_reflection(t):
    ref = math.pi * t / math.sin(math.pi * t)
    assert abs(gamma_product(2, t) - ref) <= 1e-12 * ref


def test_gamma_product_examples():
    assert gamma_product(2, 0.5).real == pytest.approx(PI_OVER_2, rel=1e-14)
    for m in (2, 3, 5):
        assert gamma_product(m, 0.0) == 1


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("t", [0.2, 0.5, 0.8])
def test_gamma_product_against_oracle_and_series(m, t):
    g = gamma_product(m, t)
    assert abs(g.imag) <= 1e-11
    assert g.real >= 1
    assert g.real == pytest.approx(GAMMA_PRODUCT[(m, t)], rel=1e-13)
    series = genfunc_coeffs_infinite(m, 32)
    assert abs(g.real - series.evaluate(t)) <= tail_bound(m, t, 32) + 1e-10


def test_gamma_product_pole():
    with pytest.raises(PoleError):
        gamma_product(2, 1.0)


def test_finite_product_examples():
    assert finite_product(2, 1, 0.5) == pytest.approx(4 / 3, rel=1e-15)
    assert finite_product(2.5, 17, 0.0) == 1
    p = finite_product(2, 1000, 0.5)
    assert 0 < PI_OVER_2 - p < 1e-3


def test_finite_product_non_integer_exponent():
    # prod n^a/(n^a - t^a) with a = 1.5, computed term by term with mpmath
    ref = mpmath.fprod(n**1.5 / (n**1.5 - mpmath.mpf(0.7) ** 1.5) for n in range(1, 30))
    assert finite_product(1.5, 29, 0.7) == pytest.approx(float(ref), rel=1e-14)
    with pytest.raises(ValueError):
        finite_product(1.5, 3, -0.5)


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("t", [0.1, 0.5, 0.9])
def test_finite_product_increases_to_gamma_product(m, t):
    limit = gamma_product(m, t).real
    vals = [finite_product(m, N, t) for N in (1, 2, 5, 10, 50, 200, 1000)]
    assert vals[0] >= 1
    assert all(x < y for x, y in zip(vals, vals[1:]))
    assert vals[-1] <= limit
    assert limit - vals[-1] <= finite_product_gap_bound(m, 1000, t, limit)


def test_finite_product_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        finite_product(2, 3, 2.0)


# -- beta -------------------------------------------------------------------


def test_beta_examples():
    assert beta(1, 1) == pytest.approx(1, rel=1e-14)
    assert beta(2, 3) == pytest.approx(1 / 12, rel=1e-14)
    assert beta(1.5, 0.5).real == pytest.approx(PI_OVER_2, rel=1e-14)


@pytest.mark.parametrize("N", [1, 2, 7, 20, 50])
@pytest.mark.parametrize("t", [i / 10 for i in range(1, 10)])
def test_beta_matches_finite_product(N, t):
    fp = finite_product(1, N, t)
    assert abs(N * beta(N, 1 - t) - fp) <= 1e-11 * fp


def test_beta_large_arguments_against_mpmath():
    for x, y in ((200, 0.5), (1e4, 1 - 0.5j), (300.0, 2.5)):
        ref = complex(mpmath.beta(x, y))
        assert abs(beta(x, y) - ref) <= 1e-10 * abs(ref)


def test_beta_pole():
    with pytest.raises(PoleError):
        beta(-1, 2)


def test_beta_limit_examples():
    for N in (1, 10, 1000):
        assert beta_limit(1, N) == pytest.approx(1, rel=1e-12)
    assert abs(beta_limit(0.5, 10**4) - SQRT_PI) < 1e-4
    z = 1 - 0.5j
    assert abs(beta_limit(z, 1000) - GAMMA[complex(1.0, -0.5)]) < 5e-3


def test_beta_limit_error_shrinks():
    for z in (0.5, 1 - 0.5j, 2 + 1j):
        ref = complex(mpmath.gamma(z))
        errs = [abs(beta_limit(z, N) - ref) for N in (10, 100, 1000, 10_000)]
        assert all(y < x for x, y in zip(errs, errs[1:]))
        # roughly O(1/N): each decade shrinks the error about tenfold
        assert errs[-1] * 10_000 == pytest.approx(errs[-2] * 1000, rel=0.05)


def test_multibeta():
    assert multibeta([1, 1, 1]) == pytest.approx(0.5, rel=1e-14)
    assert multibeta([2, 2, 2]) == pytest.approx(1 / 120, rel=1e-14)
    assert multibeta([2, 3]) == pytest.approx(beta(2, 3), rel=1e-14)


# -- zeta -------------------------------------------------------------------


@pytest.mark.parametrize("s", sorted(ZETA))
def test_zeta_against_frozen(s):
    assert abs(zeta_ref(s) - ZETA[s]) <= 1e-15


def test_zeta_examples():
    assert zeta_ref(2) == pytest.approx(1.6449340668482264, abs=1e-15)
    assert zeta_ref(3) == pytest.approx(1.2020569031595943, abs=1e-15)
    for s in (60, 80, 200):
        assert abs(zeta_ref(s) - (1 + 2.0**-s)) <= 1e-15
    with pytest.raises(ValueError):
        zeta_ref(1)


def test_zeta_against_long_direct_sum():
    # 10^6-term brute sum plus the integral tail 1/(2 N^2) estimate for s = 3
    n = np.arange(1, 10**6 + 1, dtype=np.float64)
    brute = math.fsum((1.0 / n**3)[::-1]) + 0.5e-12
    assert zeta_ref(3) == pytest.approx(brute, abs=1e-15)
