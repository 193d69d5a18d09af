"""Independent brute-force oracles used by the tests.

Everything here enumerates index tuples or lattice points directly and
never calls the convolution machinery it is checking.
"""

from itertools import product
from math import gcd, isqrt

from dtorus.cyclotomic import get_context, sum_reduce


def enumerate_spectrum(n, d):
    """Eigenvalue key -> (count, smallest index tuple) over all n^d tuples."""
    ctx = get_context(n)
    out = {}
    for t in product(range(n), repeat=d):
        key = sum_reduce(ctx, (e for k in t for e in (k, (n - k) % n)))
        hit = out.get(key)
        if hit is None:
            out[key] = (1, t)
        else:
            out[key] = (hit[0] + 1, min(hit[1], t))
    return out


def brute_r2(m):
    """Lattice count of ordered (a, b) with a^2 + b^2 = m."""
    count = 0
    for a in range(-isqrt(m), isqrt(m) + 1):
        rest = m - a * a
        b = isqrt(rest)
        if b * b == rest:
            count += 2 if b else 1
    return count


def brute_r2_upto(limit):
    """brute_r2 for all 0 <= m <= limit in one sweep."""
    out = [0] * (limit + 1)
    top = isqrt(limit)
    for a in range(-top, top + 1):
        aa = a * a
        for b in range(-top, top + 1):
            m = aa + b * b
            if m <= limit:
                out[m] += 1
    return out


def phi_brute(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
