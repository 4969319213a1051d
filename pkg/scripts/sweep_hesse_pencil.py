#!/usr/bin/env python3
"""Sweep the Hesse pencil x^3 + y^3 + z^3 - 3*t*x*y*z over rational t.

The avoidance verdict should be: avoiding iff t != 0 and t^3 != -8 (and the
curve must be smooth to start, t^3 != 1).  The sweep checks the decision
procedure against that closed-form answer on a grid of rationals.

    python scripts/sweep_hesse_pencil.py [--max-num 6] [--max-den 3]
"""

import argparse
import sys
from fractions import Fraction

from veroav.parsing import parse_poly
from veroav.veronese import check_va


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-num", type=int, default=6)
    parser.add_argument("--max-den", type=int, default=3)
    args = parser.parse_args()
    mismatches = 0
    tested = 0
    for den in range(1, args.max_den + 1):
        for num in range(-args.max_num, args.max_num + 1):
            t = Fraction(num, den)
            if t**3 == 1:
                continue  # singular member of the pencil
            src = f"x^3+y^3+z^3-3*({t.numerator}/{t.denominator})*x*y*z"
            verdict = check_va(parse_poly(src, 3)).verdict
            expected = t != 0 and t**3 != -8
            tested += 1
            marker = "" if verdict == expected else "  <-- MISMATCH"
            print(f"t = {str(t):>6}: avoiding = {verdict}{marker}")
            if verdict != expected:
                mismatches += 1
    print(f"{tested} pencil members checked, {mismatches} mismatches")
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
