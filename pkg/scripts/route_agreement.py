"""Tabulate S_{m_k}(inf) by every available route.

Routes: Newton identities on zeta values, 1-D quadrature (m = 2 only), and
Monte Carlo on the simplex.

    python scripts/route_agreement.py --n 1000000 --seed 42
"""

import argparse
import time

from epiihs import genfunc_coeffs_infinite, mc_harmonic_infinite, quad_m2

CASES = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1), (6, 1)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10**6)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    print(f"{'m':>2} {'k':>2} {'series':>20} {'quadrature':>20} {'monte carlo':>14} {'stderr':>9} {'z':>6} {'sec':>5}")
    for m, k in CASES:
        ref = genfunc_coeffs_infinite(m, k)[k]
        quad = f"{quad_m2(k):20.16f}" if m == 2 else " " * 20
        t0 = time.perf_counter()
        est = mc_harmonic_infinite(m, k, args.n, args.seed)
        dt = time.perf_counter() - t0
        z = (est.mean.real - ref) / est.stderr
        print(f"{m:>2} {k:>2} {ref:20.16f} {quad} {est.mean.real:14.8f} {est.stderr:9.2e} {z:6.2f} {dt:5.1f}")


if __name__ == "__main__":
    main()
