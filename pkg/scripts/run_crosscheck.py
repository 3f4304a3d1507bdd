#!/usr/bin/env python3
"""Cross-validate the three counting pipelines on plane curves.

Prints one line per (degree, genus) with the common value and timing, and
exits nonzero on any disagreement.  Genus ranges down to -1 to cover
counts of disconnected curves.
"""

import argparse
import sys
import time

from tropgw.ch import ch_count, max_genus
from tropgw.floors import delta_floor_count
from tropgw.gw import gw_equal, render
from tropgw.lattice import delta_polygon
from tropgw.paths import count_lattice_path


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dmax", type=int, default=4)
    parser.add_argument("--gmin", type=int, default=-1)
    args = parser.parse_args()

    failures = 0
    for d in range(2, args.dmax + 1):
        polygon = delta_polygon(d)
        for g in range(args.gmin, max_genus(d) + 1):
            start = time.monotonic()
            values = {
                "path": count_lattice_path(polygon, g),
                "flip": count_lattice_path(polygon, g, tie_break="yasc"),
                "ch": ch_count(d, g),
                "floor": delta_floor_count(d, g),
            }
            base = values["path"]
            ok = all(gw_equal(base, v) for v in values.values())
            failures += 0 if ok else 1
            status = "ok" if ok else "MISMATCH " + str(
                {k: render(v) for k, v in values.items()}
            )
            print(
                f"d={d} g={g:>2}: {render(base):<30} "
                f"rank {base.rank:>7}  [{time.monotonic() - start:.2f}s] {status}"
            )
    print("all methods agree" if failures == 0 else f"{failures} mismatches")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
