#!/usr/bin/env python3
"""Fit the node polynomials P, Q with N^delta(d) = P(d)*H + Q(d)*<1>."""

import argparse
import sys
import time

from tropgw.templates import fit_node_polynomial, poly_str


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-delta", type=int, default=3)
    parser.add_argument("--holdout", type=int, default=3)
    args = parser.parse_args()

    for delta in range(args.max_delta + 1):
        start = time.monotonic()
        fit = fit_node_polynomial(delta, n_holdout=args.holdout)
        print(f"delta = {delta}  [{time.monotonic() - start:.1f}s]")
        print(f"  P(d) = {poly_str(fit.hyperbolic_coeffs)}")
        print(f"  Q(d) = {poly_str(fit.unit_coeffs)}")
        print(f"  exact from d = {fit.threshold} on")
    return 0


if __name__ == "__main__":
    sys.exit(main())
