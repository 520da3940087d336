"""Taylor coefficients of the harmonic-sum generating functions.

The product ``prod_n 1/(1 - x_n s)`` with ``x_n = n**-a`` and ``s = t**a``
expands as ``sum_k h_k s**k`` where ``h_k`` is the complete homogeneous
symmetric function of the ``x_n``.  Newton's identities recover ``h_k`` from
the power sums ``p_r = sum_n x_n**r``, so ``h_k = S_{a_k}(N)`` for a finite
alphabet and ``h_k = S_{m_k}(inf)`` when ``p_r = zeta(m r)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TypeVar, Union

from .special import zeta_ref

Coefficient = TypeVar("Coefficient", Fraction, float)

DEFAULT_ORDER = 32


@dataclass(frozen=True)
class PowerSeries:
    """Truncated series ``sum_k coeffs[k] * t**(step*k)`` for ``k = 0..order``."""

    coeffs: tuple[Union[Fraction, float], ...]
    order: int
    step: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")
        if self.step < 1:
            raise ValueError("step must be a positive integer")

    def __getitem__(self, k: int) -> Union[Fraction, float]:
        return self.coeffs[k]

    def evaluate(self, t: float) -> float:
        """Horner evaluation in ``s = t**step``."""
        s = t**self.step
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * s + float(c)
        return acc


def power_sums(a: int, N: int, R: int) -> list[Fraction]:
    """``[p_1, ..., p_R]`` with ``p_r = sum_{n<=N} n**(-a r)``."""
    if R < 1:
        raise ValueError("R must be >= 1")
    return [sum((Fraction(1, n ** (a * r)) for n in range(1, N + 1)), Fraction(0)) for r in range(1, R + 1)]


def homogeneous_from_power_sums(p: Sequence[Coefficient], K: int) -> list[Coefficient]:
    """``h_0..h_K`` from ``k h_k = sum_{r=1}^{k} p_r h_{k-r}``.

    ``p[0]`` is ``p_1``.  Arithmetic follows the element type of ``p``, so a
    list of ``Fraction`` gives exact coefficients and a list of floats gives
    floats.
    """
    if len(p) < K:
        raise ValueError(f"need at least {K} power sums, got {len(p)}")
    h = [type(p[0])(1) if len(p) else 1]
    for k in range(1, K + 1):
        acc = p[0] * h[k - 1]
        for r in range(2, k + 1):
            acc = acc + p[r - 1] * h[k - r]
        h.append(acc / k)
    return h


def genfunc_coeffs_finite(a: int, N: int, K: int) -> PowerSeries:
    """Exact coefficients of ``prod_{n<=N} n**a/(n**a - t**a)`` in powers of ``t**a``."""
    p = power_sums(a, N, max(K, 1))
    h = homogeneous_from_power_sums(p, K)
    return PowerSeries(tuple(h), K, a)


def genfunc_coeffs_infinite(m: int, K: int = DEFAULT_ORDER) -> PowerSeries:
    """Float coefficients ``S_{m_k}(inf)``, ``k = 0..K``, using ``p_r = zeta(m r)``."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    p = [zeta_ref(m * r) for r in range(1, max(K, 1) + 1)]
    h = homogeneous_from_power_sums(p, K)
    return PowerSeries(tuple(h), K, m)


def geometric_tail_bound(m: int, t: float, K: int) -> float:
    """Bound on ``|sum_{k>K} S_{m_k}(inf) t**(mk)|`` from ``h_k <= p_1**k``.

    Only meaningful while ``zeta(m) |t|**m < 1``; returns ``inf`` otherwise.
    """
    r = zeta_ref(m) * abs(t) ** m
    if r >= 1.0:
        return math.inf
    return r ** (K + 1) / (1.0 - r)


def product_tail_bound(m: int, t: float, K: int) -> float:
    """Bound on the same tail from ``h_k <= prod_{n>=2} 1/(1 - n**-m)``.

    Every coefficient is at most that product, itself at most
    ``exp((zeta(m) - 1) / (1 - 2**-m))``.  Valid for all ``|t| < 1``.
    """
    s = abs(t) ** m
    if s >= 1.0:
        return math.inf
    cap = math.exp((zeta_ref(m) - 1.0) / (1.0 - 2.0**-m))
    return cap * s ** (K + 1) / (1.0 - s)


def tail_bound(m: int, t: float, K: int) -> float:
    return min(geometric_tail_bound(m, t, K), product_tail_bound(m, t, K))
