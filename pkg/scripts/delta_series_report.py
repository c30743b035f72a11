"""Report the successive quotients of the augmentation-ideal filtration
for dihedral quandle rings over the integers.

Usage: python3 scripts/delta_series_report.py [--max-n 10] [--kmax 3]

Odd n gives Z_n at every level.  Even n gives Z + Z_(n/2) at the first
level; the later levels are printed for inspection (their orders come
out to (n/2)^2 in every case tried here).
"""

import argparse

from quandlekit.dihedral import delta_series_shapes
from quandlekit.lattices import VARIANT_ALL, VARIANT_LEFT


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--kmax", type=int, default=3)
    parser.add_argument(
        "--variant", choices=[VARIANT_ALL, VARIANT_LEFT], default=VARIANT_ALL
    )
    args = parser.parse_args()

    for n in range(args.min_n, args.max_n + 1):
        shapes = delta_series_shapes(n, args.kmax, args.variant)
        cells = []
        for k, shape in enumerate(shapes, start=1):
            order = shape.order()
            cells.append("k=%d: %s (order %s)" % (k, shape, order if order else "inf"))
        print("n=%-3d %s" % (n, "; ".join(cells)))


if __name__ == "__main__":
    main()
