#!/usr/bin/env python3
"""Scan a ray of odd end weights on a Hirzebruch degree and fit the H part.

The count along the ray splits as  m(t)*H + c*<prod of weights>;  inside a
chamber m(t) follows a polynomial, demonstrated by interpolating a prefix
of samples and predicting the rest.
"""

import argparse
import math
import sys

from tropgw.floors import hirzebruch_count
from tropgw.gw import hyperbolic_decomposition, render, square_free
from tropgw.templates import poly_degree, poly_eval, poly_interpolate, poly_str


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--a", type=int, default=2)
    parser.add_argument("--g", type=int, default=0)
    parser.add_argument("--tmin", type=int, default=2)
    parser.add_argument("--tmax", type=int, default=11)
    args = parser.parse_args()

    samples = []
    for t in range(args.tmin, args.tmax + 1):
        w_right = (2 * t + 1, 1)
        w_left = (2 * t + 1 + args.a * args.k, 1)
        value = hirzebruch_count(args.k, args.a, args.g, w_left, w_right)
        n_hyp, rest = hyperbolic_decomposition(value)
        cls = square_free(math.prod(w_left) * math.prod(w_right))
        print(
            f"t={t:>2} w_left={w_left} w_right={w_right}: "
            f"{n_hyp}H + {render(rest)}  (expected class {cls})"
        )
        samples.append((t, n_hyp))
    for degree in range(len(samples) - 2):
        coeffs = poly_interpolate(samples[: degree + 1])
        if all(poly_eval(coeffs, t) == v for t, v in samples):
            print(
                f"H-coefficient fits a degree-{poly_degree(coeffs)} polynomial: "
                f"{poly_str(coeffs, 't')}"
            )
            return 0
    print("no exact polynomial found on this window (chamber boundary?)")
    return 1


if __name__ == "__main__":
    sys.exit(main())
