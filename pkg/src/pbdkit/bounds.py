"""Closed-form bounds on the sum of block sizes of PBDs and on the sigma
clique partition number of K_n - K_m and related graphs.

Every bound is an exact :class:`fractions.Fraction`; rounding happens only in
:attr:`BoundValue.ceil`. Square roots are never evaluated in floating point:
comparisons against ``sqrt(n)`` are done by squaring integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt

__all__ = [
    "BoundValue",
    "DomainError",
    "HypothesisViolated",
    "sigma_lower_dbe",
    "max_valency_lower",
    "bound_A",
    "bound_B",
    "bound_C",
    "best_sigma_lower",
    "large_block_free_lower",
    "large_block_free_applies",
    "scp_knkm_bounds",
    "scp_knkm_halfcase_exact",
    "scp_knkm_small_m_lower",
    "cn_coefficients",
    "cn_bounds",
    "scp_complement_lower",
    "fmt_fraction",
]


class DomainError(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class BoundValue:
    """An exact bound and its integer ceiling.

    ``exact`` is ``None`` only for irrational bounds, which carry their
    ceiling alone (see :func:`max_valency_lower`).
    """

    exact: Fraction | None
    ceil: int
    source: str

    @classmethod
    def of(cls, value, source: str) -> "BoundValue":
        value = Fraction(value)
        return cls(value, ceil(value), source)

    @property
    def floor(self) -> int:
        if self.exact is None:
            raise ValueError(f"{self.source} has no exact rational value")
        return floor(self.exact)

    def __str__(self):
        return f"{self.source}={fmt_fraction(self.exact) if self.exact is not None else '~'} (ceil {self.ceil})"


def fmt_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sigma_lower_dbe(n: int) -> BoundValue:
    """Any nontrivial PBD on n points has sigma >= 3n - 3."""
    if n < 3:
        raise DomainError("n >= 3 required")
    return BoundValue.of(3 * n - 3, "dBE")


def max_valency_lower(n: int) -> BoundValue:
    """max_x r_x >= (1 + sqrt(4n - 3)) / 2.

    The ceiling is the least integer r with r(r - 1) >= n - 1; ``exact`` is
    filled in only when 4n - 3 is a perfect square.
    """
    if n < 3:
        raise DomainError("n >= 3 required")
    r = 1
    while r * (r - 1) < n - 1:
        r += 1
    s = isqrt(4 * n - 3)
    exact = Fraction(1 + s, 2) if s * s == 4 * n - 3 else None
    return BoundValue(exact, r, "max-valency")


def bound_A(n: int, tau: int) -> BoundValue:
    if not 2 <= tau <= n:
        raise DomainError(f"2 <= tau <= n required, got n={n}, tau={tau}")
    return BoundValue.of(Fraction(n * (n - 1), tau - 1), "A")


def bound_B(n: int, k: int) -> BoundValue:
    if not 2 <= k <= n:
        raise DomainError(f"2 <= k <= n required, got n={n}, k={k}")
    return BoundValue.of((n + 1) * k - Fraction(k * k * (k - 1), n - 1), "B")


def bound_C(n: int, k: int) -> BoundValue:
    if not 2 <= k <= n:
        raise DomainError(f"2 <= k <= n required, got n={n}, k={k}")
    return BoundValue.of(k - Fraction((n - k) * (n - 5 * k - 1), 2), "C")


def best_sigma_lower(n: int, tau: int) -> tuple[BoundValue, str]:
    """Largest of bounds A, B, C for a PBD whose largest block has size tau.

    A wins for tau(tau-1) <= n-1, C for 2 tau >= n-1, B in between. Ties
    (which happen only at interval endpoints and at tau = n-1) are resolved
    towards the bound whose interval contains tau, earliest first.
    """
    if not 2 <= tau <= n - 1:
        raise DomainError(f"2 <= tau <= n - 1 required, got n={n}, tau={tau}")
    cands = (bound_A(n, tau), bound_B(n, tau), bound_C(n, tau))
    top = max(b.exact for b in cands)
    inside = {
        "A": tau * (tau - 1) <= n - 1,
        "B": tau * (tau - 1) >= n - 1 and 2 * tau <= n - 1,
        "C": 2 * tau >= n - 1,
    }
    tied = [b for b in cands if b.exact == top]
    best = next((b for b in tied if inside[b.source]), tied[0])
    return best, best.source


def _within_root_margin(n: int, total: int, size: int) -> bool:
    """size <= total - (sqrt(n) + 1)/2, i.e. sqrt(n) <= 2(total - size) - 1."""
    t = 2 * (total - size) - 1
    return t >= 0 and t * t >= n


def large_block_free_applies(n: int, max_block: int) -> bool:
    """max_block <= n - (sqrt(n) + 1) / 2, decided exactly."""
    return _within_root_margin(n, n, max_block)


def large_block_free_lower(n: int) -> BoundValue:
    """sigma >= n(floor(sqrt n) + 1) - 1 when no block exceeds n - (sqrt n + 1)/2."""
    if n < 10:
        raise DomainError(f"n >= 10 required, got {n}")
    return BoundValue.of(n * (isqrt(n) + 1) - 1, "large-block-free")


def scp_knkm_bounds(n: int, m: int) -> tuple[BoundValue, BoundValue]:
    """mn - m^2(m-1)/(n-1) <= scp(K_n - K_m) <= (2m-1)(n-m) + 1.

    The two are compared as exact rationals; for small n the lower bound
    may exceed the upper one after rounding up (e.g. n=4, m=2 gives 20/3 and 7).
    """
    if not 1 <= m <= n or n < 2:
        raise DomainError(f"1 <= m <= n, n >= 2 required, got n={n}, m={m}")
    lower = BoundValue.of(m * n - Fraction(m * m * (m - 1), n - 1), "knkm-lower")
    upper = BoundValue.of((2 * m - 1) * (n - m) + 1, "knkm-upper")
    return lower, upper


def scp_knkm_halfcase_exact(n: int, m: int) -> BoundValue:
    """scp(K_n - K_m) for m >= n/2: bound C with the size-m block removed."""
    if 2 * m < n or m > n or m < 2:
        raise DomainError(f"n/2 <= m <= n (m >= 2) required, got n={n}, m={m}")
    return BoundValue.of(bound_C(n, m).exact - m, "knkm-halfcase")


def scp_knkm_small_m_lower(n: int, m: int) -> BoundValue:
    """(2m-1)n - m, the case-wise lower bound for m <= sqrt(n)/2.

    Only the first two cases of the case analysis give this form; it is
    returned as the reference value the asymptotic (2m-1)n - O(m^2) rests on.
    """
    if m < 1 or 4 * m * m > n:
        raise DomainError(f"1 <= m <= sqrt(n)/2 required, got n={n}, m={m}")
    return BoundValue.of((2 * m - 1) * n - m, "knkm-small-m")


def cn_coefficients(c: Fraction) -> tuple[Fraction, Fraction]:
    """Leading n^2 coefficients of the lower and upper bounds for m = cn, 0 < c < 1/2."""
    c = Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise DomainError(f"0 < c < 1/2 required, got {c}")
    k = floor(1 / c)
    return c * (1 - c * c), (1 - c) * (k - c) / (k * (k - 1))


def cn_bounds(n: int, m: int) -> tuple[BoundValue, BoundValue]:
    """Leading-order terms (coefficient * n^2) of the bounds on scp(K_n - K_m), m < n/2.

    Lower-order O(n) terms are not modelled.
    """
    if not 0 < 2 * m < n:
        raise DomainError(f"0 < m < n/2 required, got n={n}, m={m}")
    lo, hi = cn_coefficients(Fraction(m, n))
    return BoundValue.of(lo * n * n, "cn-lower"), BoundValue.of(hi * n * n, "cn-upper")


def scp_complement_lower(n: int, scp_H: int, omega_H: int, omega_Hbar: int, m: int) -> BoundValue:
    """scp(K_n - H) >= n(floor(sqrt n) + 1) - 1 - scp(H) for H on m vertices.

    Requires omega(H) <= n - (sqrt n + 1)/2 and omega(H-bar) <= m - (sqrt n + 1)/2.
    """
    if n < 10:
        raise DomainError(f"n >= 10 required, got {n}")
    if not large_block_free_applies(n, omega_H):
        raise HypothesisViolated(f"omega(H)={omega_H} exceeds n - (sqrt(n)+1)/2 for n={n}")
    if not _within_root_margin(n, m, omega_Hbar):
        raise HypothesisViolated(f"omega(H-bar)={omega_Hbar} exceeds m - (sqrt(n)+1)/2 for n={n}, m={m}")
    return BoundValue.of(large_block_free_lower(n).exact - scp_H, "complement-lower")
