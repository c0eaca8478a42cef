"""Sweep the evaluation level d and tabulate the meridian-series quantities.

Prints one CSV row per (quantity, d, sign).  The exact values are rational
at every level, so the table doubles as a quick visual check that the
empty series counts dimensions and the ratio column walks (d-1)/d.

Usage:
    python3 scripts/tabulate_series.py --window 1..12
    python3 scripts/tabulate_series.py --window 1..40 --quantity ratio
"""

import argparse
import sys

from skeinlab.wrt import GAMMA_QUANTITIES, gamma_tabulate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--window", default="1..12", help="d range, e.g. 1..12")
    ap.add_argument("--quantity", choices=GAMMA_QUANTITIES, default=None,
                    help="restrict to one column (default: all)")
    args = ap.parse_args()

    lo, hi = (int(part) for part in args.window.split(".."))
    quantities = [args.quantity] if args.quantity else list(GAMMA_QUANTITIES)

    print("quantity,d,sign,value,exceptional")
    for quantity in quantities:
        gamma = gamma_tabulate(quantity, (lo, hi))
        for d in range(lo, hi + 1):
            for sign, idx in (("+", 0), ("-", 1)):
                if d in gamma.exceptions:
                    print(f"{quantity},{d},{sign},,yes")
                    continue
                value = gamma.values[d][idx]
                if hasattr(value, "as_rational") and value.as_rational() is not None:
                    shown = str(value.as_rational())
                else:
                    shown = f"{complex(value):.12g}"
                print(f"{quantity},{d},{sign},{shown},no")
    return 0


if __name__ == "__main__":
    sys.exit(main())
