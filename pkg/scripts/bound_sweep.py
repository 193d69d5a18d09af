#!/usr/bin/env python3
"""Sweep the maximum nonzero-eigenvalue multiplicity of T^2_N over a range.

Usage: bound_sweep.py [nmax]

Prints one line per N where the running maximum increases, then the
distribution of maxima. The global maximum never exceeds 24.
"""

import sys
from collections import Counter

from dtorus.criteria import verify_bound24


def main():
    nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 420
    seen = Counter()
    running = 0
    for n in range(3, nmax + 1):
        rep = verify_bound24(n)
        seen[rep.max_multiplicity] += 1
        if rep.max_multiplicity > running:
            running = rep.max_multiplicity
            print(f"N={n:>4}: new maximum {running}")
    print()
    print("max multiplicity -> number of N attaining it:")
    for mult in sorted(seen):
        print(f"  {mult:>3}: {seen[mult]}")


if __name__ == "__main__":
    main()
