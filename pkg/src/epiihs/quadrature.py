"""Numerical evaluation of the log-power integral representations.

``S_{m_k}(inf)`` equals ``(-1)**(mk) (m-1)!/(mk)!`` times the integral over the
simplex of ``(sum_j xi**j log x_{j+1})**(mk)``.  The simplex has volume
``1/(m-1)!``, so under uniform sampling the estimator reduces to
``(-1)**(mk)/(mk)!`` times the sample mean of the integrand.

For ``m = 2`` the integral collapses to a 1-D one; :func:`quad_m2` evaluates it
deterministically with tanh-sinh quadrature after the substitution
``u = log(z/(1-z))``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .special import roots_of_unity
from .streams import CHUNK_SIZE, chunk_generator, chunk_sizes, worker_count

#: Samples with a coordinate below this are redrawn.
MIN_COORDINATE = 1e-300


class QuadratureConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SimplexPoint:
    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.coords) < 1:
            raise ValueError("a simplex point needs at least one coordinate")
        if any(not c > 0.0 for c in self.coords):
            raise ValueError(f"simplex coordinates must be strictly positive: {self.coords}")
        if abs(math.fsum(self.coords) - 1.0) > 1e-14:
            raise ValueError(f"simplex coordinates must sum to 1: {self.coords}")

    @property
    def m(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo estimate; ``stderr``/``stderr_im`` belong to the real/imaginary parts."""

    mean: complex
    stderr: float
    stderr_im: float
    n_samples: int
    seed: int
    n_rejected: int = 0

    def __post_init__(self) -> None:
        if self.stderr < 0 or self.stderr_im < 0:
            raise ValueError("standard errors must be non-negative")
        if self.n_samples < 2:
            raise ValueError("an estimate needs at least two samples")

    def within(self, reference: float, sigmas: float = 4.0) -> bool:
        return abs(self.mean.real - reference) <= sigmas * self.stderr

    def imaginary_null(self, sigmas: float = 4.0) -> bool:
        return abs(self.mean.imag) <= sigmas * self.stderr_im


@dataclass(frozen=True)
class Quad1DConfig:
    U: float = 80.0
    levels: int = 8

    def __post_init__(self) -> None:
        if not self.U >= 10:
            raise QuadratureConfigError(f"truncation U must be >= 10, got {self.U}")
        if not 3 <= self.levels <= 12:
            raise QuadratureConfigError(f"levels must lie in [3, 12], got {self.levels}")


# -- integrand ---------------------------------------------------------------


def _ipow(w, n: int):
    # integer power by squaring; same operation sequence for scalars and arrays
    result = None
    base = w
    while n:
        if n & 1:
            result = base if result is None else result * base
        n >>= 1
        if n:
            base = base * base
    return (w * 0 + 1) if result is None else result


def integrand_log_power(m: int, k: int, x: Union[SimplexPoint, Sequence[float]]) -> complex:
    """``(sum_{j<m} xi_m**j * log x_{j+1}) ** (m k)``.

    The logarithm of the product ``prod x_{j+1}**(xi**j)`` is taken to be this
    sum of real logarithms, so no branch cut is involved.
    """
    coords = x.coords if isinstance(x, SimplexPoint) else tuple(x)
    if len(coords) != m:
        raise ValueError(f"expected {m} coordinates, got {len(coords)}")
    if any(not c > 0.0 for c in coords):
        raise ValueError(f"log-power integrand undefined at non-positive coordinate: {coords}")
    roots = roots_of_unity(m).values
    w = 0j
    for xi, c in zip(roots, coords):
        w += xi * math.log(c)
    return _ipow(w, m * k)


def _log_power_batch(x: np.ndarray, roots: np.ndarray, power: int) -> np.ndarray:
    w = np.log(x) @ roots
    return _ipow(w, power)


# -- sampling ----------------------------------------------------------------


def _draw_simplex(m: int, size: int, rng: np.random.Generator) -> tuple[np.ndarray, int]:
    e = rng.standard_exponential((size, m))
    x = e / e.sum(axis=1, keepdims=True)
    rejected = 0
    bad = np.flatnonzero((x < MIN_COORDINATE).any(axis=1))
    while bad.size:
        rejected += bad.size
        e = rng.standard_exponential((bad.size, m))
        x[bad] = e / e.sum(axis=1, keepdims=True)
        bad = bad[(x[bad] < MIN_COORDINATE).any(axis=1)]
    return x, rejected


def sample_simplex_uniform(m: int, rng: np.random.Generator) -> SimplexPoint:
    """One uniform point on the ``(m-1)``-simplex via normalised exponential spacings."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    x, _ = _draw_simplex(m, 1, rng)
    return SimplexPoint(tuple(float(c) for c in x[0]))


# -- chunked Monte Carlo -----------------------------------------------------


@dataclass(frozen=True)
class _ChunkStats:
    n: int
    sum_re: float
    sum_im: float
    m2_re: float
    m2_im: float
    rejected: int


def _chunk_stats(values: np.ndarray, rejected: int) -> _ChunkStats:
    re = np.ascontiguousarray(values.real, dtype=np.float64)
    im = np.ascontiguousarray(values.imag, dtype=np.float64) if np.iscomplexobj(values) else np.zeros_like(re)
    sr, si = float(re.sum()), float(im.sum())
    mr, mi = sr / re.size, si / re.size
    return _ChunkStats(re.size, sr, si, float(((re - mr) ** 2).sum()), float(((im - mi) ** 2).sum()), rejected)


def _merge(a: _ChunkStats, b: _ChunkStats) -> _ChunkStats:
    # pairwise M2 update (Chan et al.); sums are carried so a zero-variance
    # integrand keeps an exact mean
    n = a.n + b.n
    dr = b.sum_re / b.n - a.sum_re / a.n
    di = b.sum_im / b.n - a.sum_im / a.n
    w = a.n * b.n / n
    return _ChunkStats(
        n,
        a.sum_re + b.sum_re,
        a.sum_im + b.sum_im,
        a.m2_re + b.m2_re + dr * dr * w,
        a.m2_im + b.m2_im + di * di * w,
        a.rejected + b.rejected,
    )


def _simplex_mc(
    m: int,
    n_samples: int,
    seed: int,
    f: Callable[[np.ndarray], np.ndarray],
    scale: float,
    workers: Optional[int],
) -> McEstimate:
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    sizes = chunk_sizes(n_samples, CHUNK_SIZE)

    def run(idx: int) -> _ChunkStats:
        x, rej = _draw_simplex(m, sizes[idx], chunk_generator(seed, idx))
        return _chunk_stats(f(x), rej)

    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(sizes) == 1:
        parts = [run(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))

    # fixed left-to-right reduction: the output never depends on scheduling
    total = parts[0]
    for p in parts[1:]:
        total = _merge(total, p)
    n = total.n
    se_re = math.sqrt(total.m2_re / (n - 1) / n)
    se_im = math.sqrt(total.m2_im / (n - 1) / n)
    return McEstimate(
        mean=complex(scale * (total.sum_re / n), scale * (total.sum_im / n)),
        stderr=abs(scale) * se_re,
        stderr_im=abs(scale) * se_im,
        n_samples=n,
        seed=seed,
        n_rejected=total.rejected,
    )


def mc_harmonic_infinite(
    m: int, k: int, n_samples: int, seed: int = 42, workers: Optional[int] = None
) -> McEstimate:
    """Monte Carlo estimate of ``S_{m_k}(inf)`` from the simplex integral.

    Work is split into chunks of ``CHUNK_SIZE`` samples, each with its own
    counter-based stream, and combined in chunk order.  ``workers`` overrides
    ``EPIIHS_THREADS`` and changes nothing but wall time.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    power = m * k
    roots = np.array(roots_of_unity(m).values, dtype=np.complex128)
    scale = (-1.0) ** power / math.factorial(power)
    return _simplex_mc(m, n_samples, seed, lambda x: _log_power_batch(x, roots, power), scale, workers)


def multibeta_check(
    alphas: Sequence[float], n_samples: int, seed: int = 42, workers: Optional[int] = None
) -> McEstimate:
    """Monte Carlo estimate of ``int_simplex prod x_i**(alpha_i - 1) dx``.

    Compare against :func:`epiihs.special.multibeta`.
    """
    al = np.asarray(alphas, dtype=np.float64)
    if al.ndim != 1 or al.size < 2:
        raise ValueError("need at least two alphas")
    if (al < 1.0).any():
        raise ValueError(f"all alphas must be >= 1, got {list(alphas)}")
    m = al.size
    exps = al - 1.0
    volume = 1.0 / math.factorial(m - 1)
    return _simplex_mc(m, n_samples, seed, lambda x: np.prod(x**exps, axis=1), volume, workers)


# -- deterministic m = 2 quadrature ------------------------------------------


def _tail_bound(k: int, U: float) -> float:
    # 2 * int_U^inf u^(2k) e^(-u) du = 2 * (2k)! e^(-U) sum_{j<=2k} U^j / j!
    n = 2 * k
    log_terms = [j * math.log(U) - math.lgamma(j + 1) for j in range(n + 1)]
    top = max(log_terms)
    s = sum(math.exp(t - top) for t in log_terms)
    return 2.0 * math.exp(math.lgamma(n + 1) - U + top + math.log(s))


def _tanh_sinh_nodes(levels: int) -> tuple[np.ndarray, np.ndarray]:
    h = 2.0**-levels
    t = np.arange(-int(3.5 / h), int(3.5 / h) + 1) * h
    s = 0.5 * math.pi * np.sinh(t)
    nodes = np.tanh(s)
    weights = h * 0.5 * math.pi * np.cosh(t) / np.cosh(s) ** 2
    return nodes, weights


def quad_m2(k: int, cfg: Quad1DConfig = Quad1DConfig()) -> float:
    """``S_{2_k}(inf) = 1/(2k)! int_0^1 log(z/(1-z))**(2k) dz``.

    After ``u = log(z/(1-z))`` the integrand is ``u**(2k) / (4 cosh(u/2)**2)``,
    integrated over ``[-U, U]`` by tanh-sinh quadrature.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    tail = _tail_bound(k, cfg.U)
    if tail >= 1e-14:
        raise QuadratureConfigError(
            f"truncation U={cfg.U} leaves a tail of {tail:.3g} for k={k}; increase U"
        )
    nodes, weights = _tanh_sinh_nodes(cfg.levels)
    u = cfg.U * nodes
    vals = u ** (2 * k) / (4.0 * np.cosh(0.5 * u) ** 2)
    integral = cfg.U * math.fsum(weights * vals)
    return integral / math.factorial(2 * k)
