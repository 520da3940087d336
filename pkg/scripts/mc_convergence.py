"""Standard error of the simplex Monte Carlo estimator against sample count.

The estimator is plain uniform sampling, so stderr * sqrt(n) should settle
to a constant per (m, k); this prints that constant as n grows.

    python scripts/mc_convergence.py -m 3 -k 1
"""

import argparse
import math

from epiihs import genfunc_coeffs_infinite, mc_harmonic_infinite


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-m", type=int, default=3)
    parser.add_argument("-k", type=int, default=1)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--max-exp", type=int, default=7)
    args = parser.parse_args()

    ref = genfunc_coeffs_infinite(args.m, args.k)[args.k]
    print(f"S_{{{args.m}_{args.k}}}(inf) = {ref!r}")
    print(f"{'n':>10} {'estimate':>14} {'stderr':>10} {'stderr*sqrt(n)':>15} {'z':>6} {'|im|/se_im':>10}")
    for e in range(3, args.max_exp + 1):
        n = 10**e
        est = mc_harmonic_infinite(args.m, args.k, n, args.seed)
        zi = abs(est.mean.imag) / est.stderr_im if est.stderr_im else 0.0
        print(
            f"{n:>10} {est.mean.real:14.8f} {est.stderr:10.2e} {est.stderr * math.sqrt(n):15.4f} "
            f"{(est.mean.real - ref) / est.stderr:6.2f} {zi:10.2f}"
        )


if __name__ == "__main__":
    main()
