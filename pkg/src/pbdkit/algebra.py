"""Primes, prime powers and small finite fields GF(p^e).

Field elements are coefficient vectors over GF(p), stored as the integer
``sum(c[i] * p**i)`` so that ``0`` and ``1`` are the additive and
multiplicative identities and elements of the prime subfield keep their
usual integer value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import isqrt

__all__ = [
    "CapExceeded",
    "FiniteField",
    "NotPrimePower",
    "PrimePower",
    "DEFAULT_FIELD_CAP",
    "gf_construct",
    "is_prime",
    "next_prime_at_least",
    "next_prime_power_at_least",
    "prime_power_decompose",
]

DEFAULT_FIELD_CAP = 2**16
_U64 = 2**64

# Deterministic for every n < 3.3 * 10**24, which covers 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NotPrimePower(ValueError):
    pass


class CapExceeded(ValueError):
    pass


def is_prime(x: int) -> bool:
    """Deterministic Miller-Rabin primality test for ``0 <= x < 2**64``."""
    if x < 0 or x >= _U64:
        raise ValueError(f"is_prime expects a 64-bit non-negative integer, got {x}")
    if x < 2:
        return False
    for p in _MR_WITNESSES:
        if x % p == 0:
            return x == p
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def next_prime_at_least(x: int) -> int:
    """Smallest prime ``p >= x``, found by upward search."""
    if x < 2:
        raise ValueError("x must be >= 2")
    p = x
    while p < _U64:
        if is_prime(p):
            return p
        p += 1
    raise OverflowError(f"no prime >= {x} below 2**64")


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if self.e < 1 or not is_prime(self.p):
            raise NotPrimePower(f"({self.p}, {self.e}) is not a valid prime power")

    @property
    def q(self) -> int:
        return self.p**self.e

    def __int__(self) -> int:
        return self.q


def prime_power_decompose(q: int) -> PrimePower:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    if is_prime(q):
        return PrimePower(q, 1)
    # q = p**e with e >= 2 implies p <= sqrt(q); exponents are tried from the
    # largest down so that the base found is prime whenever one exists.
    for e in range(q.bit_length(), 1, -1):
        p = _integer_root(q, e)
        if p is not None and is_prime(p):
            return PrimePower(p, e)
    raise NotPrimePower(f"{q} is not a prime power")


def _integer_root(x: int, k: int) -> int | None:
    r = round(x ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 2 and cand**k == x:
            return cand
    return None


def next_prime_power_at_least(x: int) -> PrimePower:
    if x < 2:
        raise ValueError("x must be >= 2")
    q = x
    while q < _U64:
        try:
            return prime_power_decompose(q)
        except NotPrimePower:
            q += 1
    raise OverflowError(f"no prime power >= {x} below 2**64")


# -- polynomials over GF(p): coefficient lists, lowest degree first -----------


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of ``a`` modulo the monic polynomial ``m``."""
    a = _poly_trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _poly_trim(a)
    return a


def _monic_polys(p, degree):
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def _is_irreducible(m, p):
    degree = len(m) - 1
    for d in range(1, degree // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(m, f, p):
                return False
    return True


def _smallest_irreducible(p, e):
    # Lexicographic order on (c_{e-1}, ..., c_0) of the monic x^e + ... .
    for high_first in itertools.product(range(p), repeat=e):
        m = list(reversed(high_first)) + [1]
        if _is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True)
class FiniteField:
    """GF(q) with q = p**e, elements encoded as integers in ``range(q)``.

    ``modulus`` holds the monic irreducible polynomial, lowest coefficient
    first (``[0, 1]``, i.e. ``x``, for prime fields).
    """

    order: PrimePower
    modulus: tuple
    _mul: list = field(repr=False, compare=False, default=None)
    _inv: list = field(repr=False, compare=False, default=None)

    @property
    def q(self) -> int:
        return self.order.q

    @property
    def p(self) -> int:
        return self.order.p

    def elements(self) -> range:
        return range(self.q)

    def to_vector(self, a: int) -> tuple:
        p, e = self.order.p, self.order.e
        return tuple((a // p**i) % p for i in range(e))

    def from_vector(self, v) -> int:
        p = self.order.p
        if len(v) != self.order.e or any(not 0 <= c < p for c in v):
            raise ValueError(f"bad coefficient vector {v!r} for GF({self.q})")
        return sum(c * p**i for i, c in enumerate(v))

    def add(self, a: int, b: int) -> int:
        if self.order.e == 1:
            return (a + b) % self.p
        return self.from_vector([(x + y) % self.p for x, y in zip(self.to_vector(a), self.to_vector(b))])

    def neg(self, a: int) -> int:
        if self.order.e == 1:
            return -a % self.p
        return self.from_vector([-x % self.p for x in self.to_vector(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p, e = self.order.p, self.order.e
        if e == 1:
            return a * b % p
        x, y = self.to_vector(a), self.to_vector(b)
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        r = _poly_mod(prod, list(self.modulus), p)
        return self.from_vector(r + [0] * (e - len(r)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        if self._inv is not None:
            return self._inv[a]
        if self.order.e == 1:
            return pow(a, -1, self.p)
        # a^(q-2) = a^-1 in GF(q)*
        return self.pow(a, self.q - 2)

    def pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k


_TABLE_LIMIT = 512


def gf_construct(q: int | PrimePower, cap: int = DEFAULT_FIELD_CAP) -> FiniteField:
    """Build GF(q) using the lexicographically smallest monic irreducible."""
    order = q if isinstance(q, PrimePower) else prime_power_decompose(q)
    if order.q > cap:
        raise CapExceeded(f"GF({order.q}) exceeds the field cap {cap}")
    if order.e == 1:
        modulus = (0, 1)
    else:
        modulus = tuple(_smallest_irreducible(order.p, order.e))
    f = FiniteField(order, modulus)
    if order.q <= _TABLE_LIMIT:
        mul = [[f._mul_slow(a, b) for b in range(order.q)] for a in range(order.q)]
        object.__setattr__(f, "_mul", mul)
        inv = [0] * order.q
        for a in range(1, order.q):
            inv[a] = next(b for b in range(1, order.q) if mul[a][b] == 1)
        object.__setattr__(f, "_inv", inv)
    return f


def isqrt_ceil(n: int) -> int:
    """Smallest integer r with r*r >= n."""
    r = isqrt(n)
    return r if r * r == n else r + 1
