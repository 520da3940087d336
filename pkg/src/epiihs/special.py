"""Complex gamma, beta and the generating-function products.

Values are Python ``complex``; every public function refuses to hand back a
NaN or infinity and raises :class:`SpecialFunctionError` instead.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

ComplexValue = complex

POLE_TOLERANCE = 1e-12

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_HALF_SQRT_3 = 0.5 * math.sqrt(3.0)
_SQRT_HALF = math.sqrt(0.5)

# Largest argument modulus for which gamma products are formed directly
# before falling back to log-gamma differences (Gamma(171) overflows).
_DIRECT_BETA_LIMIT = 140.0


class SpecialFunctionError(ArithmeticError):
    pass


class PoleError(SpecialFunctionError):
    """Argument sits on (or within POLE_TOLERANCE of) a non-positive integer."""


class NonFiniteError(SpecialFunctionError):
    pass


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteError(f"{what} is not finite: {z}")
    return z


@dataclass(frozen=True)
class RootsOfUnity:
    m: int
    values: tuple[complex, ...]

    def __getitem__(self, j: int) -> complex:
        return self.values[j % self.m]

    def __len__(self) -> int:
        return self.m


def _unit_point(num: int, den: int) -> complex:
    """``exp(2 pi i num/den)`` for ``0 <= num/den <= 1/2``, reduced to the first octant.

    Reduction is done on the exact fraction, so mirrored angles produce
    mirrored (bitwise negated or swapped) floats.
    """
    if 4 * num > den:  # past a quarter turn: rotate by i
        v = _unit_point(4 * num - den, 4 * den)
        return complex(-v.imag, v.real)
    if 8 * num > den:  # past an eighth: swap cos and sin of the complement
        v = _unit_point(den - 4 * num, 4 * den)
        return complex(v.imag, v.real)
    if 12 * num == den:
        return complex(_HALF_SQRT_3, 0.5)
    if 8 * num == den:
        return complex(_SQRT_HALF, _SQRT_HALF)
    theta = 2.0 * math.pi * num / den
    return complex(math.cos(theta), math.sin(theta))


def roots_of_unity(m: int) -> RootsOfUnity:
    """``xi_m**j = exp(2 pi i j / m)`` for ``j = 0..m-1``.

    The upper half is computed and the lower half mirrored, so
    ``values[m-j] == values[j].conjugate()`` holds bit for bit; axis points
    come out exact.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    vals: list[complex] = [0j] * m
    for j in range(m // 2 + 1):
        v = _unit_point(j, m)
        vals[j] = v
        if j:
            vals[m - j] = v.conjugate()
    return RootsOfUnity(m, tuple(vals))


def _pole_check(z: complex) -> None:
    if z.real <= 0.5 and abs(z.imag) <= POLE_TOLERANCE:
        n = round(z.real)
        if n <= 0 and abs(z.real - n) <= POLE_TOLERANCE:
            raise PoleError(f"gamma has a pole at {n} (argument {z})")


def _lanczos_log_gamma(z: complex) -> complex:
    # valid for Re z >= 1/2; not necessarily the principal branch
    z -= 1
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def _sin_pi(z: complex) -> complex:
    # sin(pi z) with the integer part of Re z removed first, keeping relative
    # accuracy near the poles of the reflected gamma
    n = round(z.real)
    s = cmath.sin(math.pi * (z - n))
    return -s if n % 2 else s


def gamma_complex(z: complex) -> complex:
    """Gamma on the complex plane.

    Lanczos approximation on ``Re z >= 1/2``, reflection
    ``Gamma(z) Gamma(1-z) = pi / sin(pi z)`` to the left of it.
    """
    z = complex(z)
    _pole_check(z)
    if z.imag == 0.0 and z.real.is_integer() and 1 <= z.real <= 171:
        return complex(math.factorial(int(z.real) - 1))
    if z.real < 0.5:
        g = math.pi / (_sin_pi(z) * gamma_complex(1.0 - z))
    else:
        g = cmath.exp(_lanczos_log_gamma(z))
    return _finite(g, f"gamma({z})")


def log_gamma_complex(z: complex) -> complex:
    """A logarithm of Gamma(z) for ``Re z >= 1/2`` (branch unspecified)."""
    z = complex(z)
    if z.real < 0.5:
        raise ValueError("log_gamma_complex requires Re z >= 1/2")
    return _lanczos_log_gamma(z)


def gamma_product(m: int, t: float) -> complex:
    """``prod_{j<m} Gamma(1 - xi_m**j t)``, the closed form of the infinite generating function."""
    roots = roots_of_unity(m)
    out = 1 + 0j
    for xi in roots.values:
        out *= gamma_complex(1.0 - xi * t)
    return _finite(out, "gamma product")


def finite_product(a: float, N: int, t: float) -> float:
    """``prod_{n=1}^{N} n**a / (n**a - t**a)``, factors multiplied in increasing ``n``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if t < 0 and not float(a).is_integer():
        raise ValueError("negative t needs an integer exponent a")
    ta = t**a
    out = 1.0
    for n in range(1, N + 1):
        na = float(n) ** a
        denom = na - ta
        if denom == 0.0:
            raise ZeroDivisionError(f"t**a equals n**a at n = {n}")
        out *= na / denom
    return out


def finite_product_gap_bound(m: int, N: int, t: float, limit: float) -> float:
    """Bound on ``|limit - finite_product(m, N, t)|`` for integer ``m >= 2``.

    The missing factors ``1/(1 - (t/n)**m)``, ``n > N``, have a log-sum of at
    most ``L = |t|**m N**(1-m) / ((m-1)(1 - (|t|/(N+1))**m))``, so the gap is at
    most ``|limit| (exp(L) - 1)``.
    """
    x = abs(t) ** m
    L = x * float(N) ** (1 - m) / ((m - 1) * (1.0 - x / float(N + 1) ** m))
    return abs(limit) * math.expm1(L)


def beta(x: complex, y: complex) -> complex:
    """``B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)``."""
    x, y = complex(x), complex(y)
    s = x + y
    for w in (x, y, s):
        _pole_check(w)
    if max(abs(x), abs(y), abs(s)) < _DIRECT_BETA_LIMIT:
        return _finite(gamma_complex(x) * gamma_complex(y) / gamma_complex(s), "beta")
    if min(x.real, y.real) < 0.5:
        raise SpecialFunctionError("large-argument beta needs Re x, Re y >= 1/2")
    # log branches differ by multiples of 2 pi i, which exp() discards
    lb = _lanczos_log_gamma(x) + _lanczos_log_gamma(y) - _lanczos_log_gamma(s)
    return _finite(cmath.exp(lb), "beta")


def beta_limit(z: complex, N: int) -> complex:
    """``N**z B(N, z)``, which tends to ``Gamma(z)`` as ``N`` grows."""
    z = complex(z)
    if z.real <= 0:
        raise ValueError("beta_limit requires Re z > 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    return _finite(cmath.exp(z * math.log(N)) * beta(complex(N), z), "beta limit")


def multibeta(alphas: Sequence[complex]) -> complex:
    """``prod Gamma(alpha_i) / Gamma(sum alpha_i)``."""
    if len(alphas) < 1:
        raise ValueError("need at least one alpha")
    num = 1 + 0j
    for al in alphas:
        num *= gamma_complex(al)
    return _finite(num / gamma_complex(sum(complex(al) for al in alphas)), "multibeta")


# Euler-Maclaurin cut-off and the Bernoulli numbers it uses.
_ZETA_CUTOFF = 100
_B2 = 1.0 / 6.0
_B4 = -1.0 / 30.0


def zeta_ref(s: int) -> float:
    """Riemann zeta at an integer ``s >= 2``.

    Direct sum of ``n**-s`` for ``n < 100``, then the Euler-Maclaurin tail
    from ``n = 100`` on through the ``B_4`` correction.  The first omitted
    term is below ``3e-16`` for ``s = 2`` and shrinks with ``s``.
    """
    if s < 2:
        raise ValueError(f"zeta_ref needs s >= 2, got {s}")
    n0 = _ZETA_CUTOFF
    head = [float(n) ** -s for n in range(1, n0)]
    tail = [
        n0 ** (1.0 - s) / (s - 1),
        0.5 * n0 ** (-float(s)),
        _B2 / 2.0 * s * n0 ** (-s - 1.0),
        _B4 / 24.0 * s * (s + 1) * (s + 2) * n0 ** (-s - 3.0),
    ]
    return math.fsum(head + tail)
