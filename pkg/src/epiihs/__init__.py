"""Equally indexed harmonic sums: exact values, generating functions and integral representations."""

from .exact import (
    INFINITY,
    EnumerationTooLarge,
    HarmonicSpec,
    InvalidSpecError,
    Partition,
    brute_force_sum,
    harmonic_sum_exact,
    partition_sum,
    partition_weight_sum,
    qseries_coefficient,
)
from .quadrature import (
    McEstimate,
    Quad1DConfig,
    SimplexPoint,
    integrand_log_power,
    mc_harmonic_infinite,
    multibeta_check,
    quad_m2,
    sample_simplex_uniform,
)
from .series import (
    PowerSeries,
    genfunc_coeffs_finite,
    genfunc_coeffs_infinite,
    homogeneous_from_power_sums,
    power_sums,
)
from .special import (
    PoleError,
    RootsOfUnity,
    beta,
    beta_limit,
    finite_product,
    gamma_complex,
    gamma_product,
    multibeta,
    roots_of_unity,
    zeta_ref,
)

__version__ = "0.1.0"
