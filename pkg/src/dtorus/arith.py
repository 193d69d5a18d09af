"""Factorization and numerical-semigroup helpers (desk scale)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes increasing."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        out = 1
        for p, a in self.pairs:
            out *= p**a
        return out


def factorize(n: int) -> Factorization:
    """Exact factorization by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            pairs.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def semigroup_member(length: int, primes) -> tuple[bool, tuple[int, ...] | None]:
    """Membership of ``length`` in the semigroup generated by ``primes``.

    Dynamic programming with parent pointers; the witness coefficients b
    satisfy sum(b[i] * primes[i]) == length when membership holds.
    """
    primes = tuple(primes)
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return True, (0,) * len(primes)
    if not primes:
        return False, None
    parent: list[int | None] = [None] * (length + 1)
    parent[0] = -1
    for x in range(1, length + 1):
        for i, p in enumerate(primes):
            if p <= x and parent[x - p] is not None:
                parent[x] = i
                break
    if parent[length] is None:
        return False, None
    coeffs = [0] * len(primes)
    x = length
    while x:
        i = parent[x]
        coeffs[i] += 1
        x -= primes[i]
    return True, tuple(coeffs)
