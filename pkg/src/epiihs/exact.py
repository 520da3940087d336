"""Exact evaluation of equally indexed harmonic sums.

Every finite sum here is a :class:`fractions.Fraction`.  ``Fraction`` keeps
itself reduced with a positive denominator after each operation, which is
exactly the invariant required of the rational value type, so it is used
directly rather than wrapped.

Three independent routes compute ``S_{a_k}(N)``:

* :func:`brute_force_sum` enumerates all tuples ``N >= n_1 >= ... >= n_k >= 1``.
* :func:`harmonic_sum_exact` runs the nesting recurrence in ``O(kN)``.
* :func:`partition_sum` sums ``1/n_lambda**a`` over partitions of length ``k``
  with parts at most ``N``.

The q-Pochhammer product identity is checked coefficientwise by
:func:`qseries_coefficient` against :func:`partition_weight_sum`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

BigRational = Fraction

INFINITY = math.inf

#: Upper bound on tuples or partitions any enumerating routine will visit.
ENUMERATION_LIMIT = 10**7


class InvalidSpecError(ValueError):
    """Raised for an index bundle outside the admissible range."""


class EnumerationTooLarge(RuntimeError):
    """Raised when an enumeration would exceed :data:`ENUMERATION_LIMIT`."""

    def __init__(self, count: int, limit: int = ENUMERATION_LIMIT):
        super().__init__(f"enumeration of {count} items exceeds guard of {limit}")
        self.count = count
        self.limit = limit


Cutoff = Union[int, float]


@dataclass(frozen=True)
class HarmonicSpec:
    """Names one sum ``S_{a_k}(N)``; ``N`` may be :data:`INFINITY`."""

    a: int
    k: int
    N: Cutoff

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or not isinstance(self.a, int) or self.a < 1:
            raise InvalidSpecError(f"exponent a must be a positive integer, got {self.a!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 0:
            raise InvalidSpecError(f"length k must be a non-negative integer, got {self.k!r}")
        if self.N == INFINITY:
            if self.k >= 1 and self.a < 2:
                raise InvalidSpecError("S_{a_k}(inf) diverges for a = 1 and k >= 1")
        elif isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise InvalidSpecError(f"cutoff N must be a positive integer or INFINITY, got {self.N!r}")

    @property
    def is_finite(self) -> bool:
        return self.N != INFINITY


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(x < y for x, y in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def part_product(self) -> int:
        return math.prod(self.parts)


def _require_finite(spec: HarmonicSpec) -> int:
    if not spec.is_finite:
        raise InvalidSpecError("exact evaluation needs a finite cutoff N")
    return int(spec.N)


def _guard(count: int) -> None:
    if count > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(count)


def brute_force_sum(spec: HarmonicSpec) -> Fraction:
    """Sum ``1/(n_1...n_k)**a`` over every non-increasing ``k``-tuple in ``1..N``."""
    N = _require_finite(spec)
    _guard(math.comb(N + spec.k - 1, spec.k))
    total = Fraction(0)
    # combinations_with_replacement yields sorted tuples; reversing each one
    # gives exactly the non-increasing tuples, once each.
    for tup in itertools.combinations_with_replacement(range(1, N + 1), spec.k):
        total += Fraction(1, math.prod(tup) ** spec.a)
    return total


def harmonic_sum_exact(spec: HarmonicSpec) -> Fraction:
    """Nesting recurrence ``S_j(n) = S_j(n-1) + S_{j-1}(n) / n**a``."""
    N = _require_finite(spec)
    # row[n] holds S_{a_j}(n) for the current depth j; S_{a_0}(n) = 1
    row = [Fraction(1)] * (N + 1)
    for _ in range(spec.k):
        nxt = [Fraction(0)] * (N + 1)
        for n in range(1, N + 1):
            nxt[n] = nxt[n - 1] + row[n] / n**spec.a
        row = nxt
    return row[N]


def bounded_partitions(length: int, max_part: int) -> Iterator[Partition]:
    """Partitions with exactly ``length`` parts, each at most ``max_part``.

    Reverse-lexicographic order: ``(max_part, ..., max_part)`` first.
    """
    if length == 0:
        yield Partition(())
        return
    parts = [max_part] * length
    while True:
        yield Partition(tuple(parts))
        # rightmost part that can still be lowered
        i = length - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        parts[i] -= 1
        for j in range(i + 1, length):
            parts[j] = parts[i]


def partitions_of(M: int, max_part: int) -> Iterator[Partition]:
    """Partitions of ``M`` with parts at most ``max_part``, reverse-lexicographic.

    Descent step: drop the rightmost part larger than one by one and refill the
    tail greedily with copies of the new value.
    """
    if M == 0:
        yield Partition(())
        return
    if max_part < 1:
        return
    first = min(M, max_part)
    parts = [first] * (M // first)
    if M % first:
        parts.append(M % first)
    while True:
        yield Partition(tuple(parts))
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        v = parts.pop() - 1
        rest = ones + 1 + v
        q, r = divmod(rest, v)
        parts.extend([v] * q)
        if r:
            parts.append(r)


def count_partitions(M: int, max_part: int) -> int:
    """Number of partitions of ``M`` into parts at most ``max_part``."""
    ways = [1] + [0] * M
    for part in range(1, min(M, max_part) + 1):
        for total in range(part, M + 1):
            ways[total] += ways[total - part]
    return ways[M]


def partition_sum(spec: HarmonicSpec) -> Fraction:
    """``sum 1/n_lambda**a`` over partitions with ``k`` parts, all ``<= N``."""
    N = _require_finite(spec)
    _guard(math.comb(N + spec.k - 1, spec.k))
    total = Fraction(0)
    for lam in bounded_partitions(spec.k, N):
        total += Fraction(1, lam.part_product**spec.a)
    return total


def qseries_coefficient(N: int, M: int, t: Fraction, a: int) -> Fraction:
    """Coefficient of ``q**M`` in ``prod_{n<=N} 1/(1 - (t**a/n**a) q**n)``.

    Each factor is a geometric series in ``q**n``; multiplying it into a
    series truncated at degree ``M`` is the in-place running sum below.
    """
    if M < 0:
        raise ValueError("M must be non-negative")
    t = Fraction(t)
    coeffs = [Fraction(1)] + [Fraction(0)] * M
    ta = t**a
    for n in range(1, min(N, M) + 1):
        c = ta / n**a
        for d in range(n, M + 1):
            coeffs[d] += c * coeffs[d - n]
    return coeffs[M]


def partition_weight_sum(N: int, M: int, t: Fraction, a: int) -> Fraction:
    """Sum over partitions of ``M`` with parts in ``1..N`` of ``prod t**a/part**a``."""
    if M < 0:
        raise ValueError("M must be non-negative")
    _guard(count_partitions(M, N))
    t = Fraction(t)
    ta = t**a
    total = Fraction(0)
    for lam in partitions_of(M, N):
        total += ta**lam.length / Fraction(lam.part_product**a)
    return total
