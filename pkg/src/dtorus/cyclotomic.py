"""Exact arithmetic in Z[x]/(Phi_N(x)).

A sum of N-th roots of unity is stored as its canonical residue modulo the
N-th cyclotomic polynomial Phi_N.  Two sums are equal as complex numbers
exactly when their residues agree coefficient-for-coefficient, so a residue
doubles as a hashable dictionary key when eigenvalues get grouped into
multiplicity tables.  Coefficients are plain Python ints and never overflow.

Polynomials are dense coefficient sequences, constant term first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import mpmath


def _divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials; ``den`` must be monic."""
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    work = list(num)
    dn = len(den) - 1
    if len(work) - 1 < dn:
        return [0], work
    quot = [0] * (len(work) - dn)
    for i in range(len(work) - 1, dn - 1, -1):
        c = work[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                work[i - dn + j] -= c * den[j]
    rem = work[:dn]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (monic, degree totient(n), constant term first).

    Built by exact division of x^n - 1 by Phi_d over the proper divisors d
    of n, so every intermediate stays an integer polynomial.
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs: list[int] = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            coeffs, rem = _divmod_monic(coeffs, cyclotomic_poly(d))
            if any(rem):
                raise AssertionError(f"Phi_{d} does not divide x^{n}-1")
    return tuple(coeffs)


class CycElt:
    """Canonical residue of a root-of-unity sum; immutable, hashable, exact.

    ``coeffs`` has length phi(n) and represents the residue of degree
    < phi(n) modulo Phi_n.  Instances over the same modulus are equal iff
    their coefficient tuples are identical, which is the entire point:
    distinct eigenvalues never collide and equal ones never split.
    """

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: tuple[int, ...]):
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.n, self.coeffs))
        return h

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycElt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"CycElt(n={self.n}, coeffs={list(self.coeffs)})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other: "CycElt | int") -> "CycElt":
        if isinstance(other, int):
            return get_context(self.n).const(other)
        if not isinstance(other, CycElt):
            raise TypeError(f"cannot combine CycElt with {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mixed moduli {self.n} and {other.n}")
        return other

    def __add__(self, other: "CycElt | int") -> "CycElt":
        o = self._coerce(other)
        return CycElt(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: "CycElt | int") -> "CycElt":
        o = self._coerce(other)
        return CycElt(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: int) -> "CycElt":
        o = self._coerce(other)
        return CycElt(self.n, tuple(b - a for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "CycElt":
        return CycElt(self.n, tuple(-a for a in self.coeffs))


class CycContext:
    """Shared immutable reduction data for one modulus N.

    Holds Phi_N and the canonical residues of x^k for 0 <= k < N, turning
    root-power sums into O(phi) coefficient arithmetic.
    """

    __slots__ = ("n", "phi", "phi_coeffs", "_powers", "zero", "one")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        self.phi_coeffs = cyclotomic_poly(n)
        self.phi = len(self.phi_coeffs) - 1
        # Phi_N must divide x^N - 1 exactly (sanity check on construction).
        _, rem = _divmod_monic([-1] + [0] * (n - 1) + [1], self.phi_coeffs)
        if any(rem):
            raise AssertionError(f"Phi_{n} does not divide x^{n}-1")
        self._powers = self._build_powers()
        self.zero = CycElt(n, (0,) * self.phi)
        self.one = CycElt(n, (1,) + (0,) * (self.phi - 1))

    def _build_powers(self) -> tuple[tuple[int, ...], ...]:
        phi, pc = self.phi, self.phi_coeffs
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(self.n):
            powers.append(tuple(cur))
            lead = cur[phi - 1]
            nxt = [0] + cur[: phi - 1]
            if lead:
                for i in range(phi):
                    nxt[i] -= lead * pc[i]
            cur = nxt
        return tuple(powers)

    def power_coeffs(self, k: int) -> tuple[int, ...]:
        """Raw coefficient tuple of x^k reduced modulo Phi_N."""
        return self._powers[k % self.n]

    def const(self, c: int) -> CycElt:
        return CycElt(self.n, (c,) + (0,) * (self.phi - 1))

    def __repr__(self) -> str:
        return f"CycContext(n={self.n}, phi={self.phi})"


@functools.lru_cache(maxsize=64)
def get_context(n: int) -> CycContext:
    return CycContext(n)


def root_power(ctx: CycContext, k: int) -> CycElt:
    """Canonical form of zeta_n^k (k taken modulo n)."""
    return CycElt(ctx.n, ctx.power_coeffs(k))


def cos_key(ctx: CycContext, k: int) -> CycElt:
    """Canonical form of zeta^k + zeta^{-k}, i.e. the value 2 cos(2 pi k / n).

    For k = 0 this is the constant 2 (both exponents coincide), and
    cos_key(n, k) == cos_key(n, n - k) holds by construction.
    """
    n = ctx.n
    a = ctx.power_coeffs(k)
    b = ctx.power_coeffs((n - k) % n)
    return CycElt(n, tuple(x + y for x, y in zip(a, b)))


def sum_reduce(ctx: CycContext, exponents: Iterable[int]) -> CycElt:
    """Canonical form of the sum of zeta_n^e over the exponent multiset.

    The result is the zero element exactly when the root-of-unity sum
    vanishes.
    """
    acc = [0] * ctx.phi
    for e in exponents:
        for i, c in enumerate(ctx.power_coeffs(e)):
            if c:
                acc[i] += c
    return CycElt(ctx.n, tuple(acc))


@dataclass(frozen=True)
class ApproxReal:
    """Certified enclosure of the complex embedding of a residue.

    ``real`` is the midpoint of a rigorous enclosure of the real part and
    ``radius`` its half-width.  ``imag_bound`` bounds the absolute value of
    the imaginary part; for eigenvalue keys (conjugation-symmetric sums) it
    is of the same size as ``radius``.
    """

    real: mpmath.mpf
    radius: mpmath.mpf
    imag_bound: mpmath.mpf

    def __float__(self) -> float:
        return float(self.real)


@functools.lru_cache(maxsize=8)
def _trig_tables(n: int, prec: int):
    """Interval enclosures of cos/sin(2 pi k / n) for 0 <= k < n."""
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec
        two_pi = 2 * iv.pi
        cos_t = []
        sin_t = []
        for k in range(n):
            ang = two_pi * k / n
            cos_t.append(iv.cos(ang))
            sin_t.append(iv.sin(ang))
    finally:
        iv.prec = old
    return tuple(cos_t), tuple(sin_t)


def _interval_parts(e: CycElt, prec: int):
    iv = mpmath.iv
    cos_t, sin_t = _trig_tables(e.n, prec)
    old = iv.prec
    try:
        iv.prec = prec
        re = iv.mpf(0)
        im = iv.mpf(0)
        for j, a in enumerate(e.coeffs):
            if a:
                re += a * cos_t[j]
                im += a * sin_t[j]
    finally:
        iv.prec = old
    return re, im


def _endpoints(x) -> tuple[mpmath.mpf, mpmath.mpf]:
    # make_mpf wraps the raw endpoint data without rounding it to the
    # ambient precision; a plain mpf() call here could collapse the
    # interval and report a zero radius.
    a, b = x._mpi_
    return mpmath.mp.make_mpf(a), mpmath.mp.make_mpf(b)


def approx_value(ctx: CycContext, e: CycElt, bits: int = 128) -> ApproxReal:
    """Evaluate the residue at e^{2 pi i / n} with a rigorous error radius.

    Interval arithmetic gives the enclosure; the working precision starts
    at 128 bits (or above the request) and doubles until the radius drops
    below 2^-bits.
    """
    if bits < 64:
        raise ValueError("need at least 64 bits")
    if e.n != ctx.n:
        raise ValueError("element does not belong to this context")
    target = mpmath.mpf(2) ** (-bits)
    prec = max(128, bits + 32)
    while True:
        re, im = _interval_parts(e, prec)
        lo, hi = _endpoints(re)
        with mpmath.workprec(prec + 64):
            # endpoints are prec-bit dyadics, so these combinations are exact
            radius = (hi - lo) / 2
            mid = (lo + hi) / 2
        if radius <= target:
            break
        if prec > 1 << 22:  # pragma: no cover - would need absurd inputs
            raise RuntimeError("interval evaluation failed to converge")
        prec *= 2
    ilo, ihi = _endpoints(im)
    return ApproxReal(
        real=mid,
        radius=radius,
        imag_bound=max(abs(ilo), abs(ihi)),
    )
