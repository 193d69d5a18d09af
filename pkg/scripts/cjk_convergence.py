#!/usr/bin/env python3
"""Tabulate N^(-2s) zeta_{T^2_N}(s) against the continuum torus zeta.

Usage: cjk_convergence.py [s] [cutoff]
"""

import sys

import mpmath

from dtorus.zeta import cjk_table


def main():
    s = float(sys.argv[1]) if len(sys.argv) > 1 else 2.0
    cutoff = int(sys.argv[2]) if len(sys.argv) > 2 else 10**6
    n_list = [8, 16, 32, 64, 128]
    rows, ref = cjk_table(s, n_list, cutoff)
    print(f"s = {s}, continuum partial sum over shells <= {cutoff}: {mpmath.nstr(ref, 15)}")
    print(f"{'N':>5}  {'rescaled zeta':>20}  {'gap':>12}  {'relative':>10}")
    for row in rows:
        gap = abs(row.value - ref)
        print(
            f"{row.n:>5}  {mpmath.nstr(row.value, 15):>20}  "
            f"{mpmath.nstr(gap, 4):>12}  {mpmath.nstr(gap / ref, 4):>10}"
        )


if __name__ == "__main__":
    main()
