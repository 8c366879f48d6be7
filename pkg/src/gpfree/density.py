"""Density bounds and exact densities for progression-free sets of norms.

Three computations live here: the annular lower bound construction for
sets of Hurwitz integers free of geometric progressions, the matching
power-of-two upper bound, and the Euler product giving the density of
Hurwitz integers whose norm is a Rankin integer, meaning every prime
exponent of the norm avoids the digit 2 in base 3.  Bounds are exact
rationals; the Euler product is evaluated factor by factor as an exact
rational and accumulated in 50-digit decimal arithmetic.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Literal

from .quaternion import HurwitzInt

__all__ = [
    "AnnuliSpec",
    "DEFAULT_ANNULI",
    "DensityEstimate",
    "lower_bound_density",
    "rankin_apfree_contains",
    "rankin_density",
    "rankin_even_factor",
    "rankin_gpfree_contains",
    "rankin_quaternion_contains",
    "upper_bound_density",
    "verify_annuli_gp_free",
]


@dataclass(frozen=True)
class AnnuliSpec:
    """Blueprint for a union of norm annuli that avoids geometric triples.

    Around each scale M the construction keeps the norms in the
    intervals (M/lo, M/hi] for the listed (lo, hi) ratio pairs.  Scales
    grow as M' = scale_factor * M * M starting from 1, fast enough that
    blocks at different scales can never interact.
    """

    interval_ratios: tuple[tuple[int, int], ...] = (
        (48, 45),
        (40, 36),
        (32, 27),
        (24, 12),
        (9, 8),
        (4, 1),
    )
    scale_factor: int = field(default=48 * 48)

    def scales_upto(self, max_norm: int):
        """Yield block scales M whose annuli can meet [1, max_norm]."""
        widest = max(lo for lo, _ in self.interval_ratios)
        m = 1
        while m < widest * max_norm:
            yield m
            m = self.scale_factor * m * m

    def contains(self, n: int, max_norm: int) -> bool:
        """Whether norm n belongs to some annulus with scale visible below max_norm.

        Membership of n in (M/lo, M/hi] is decided by the integer tests
        n * lo > M and n * hi <= M, so no rounding is involved.
        """
        for m in self.scales_upto(max_norm):
            for lo, hi in self.interval_ratios:
                if n * lo > m and n * hi <= m:
                    return True
        return False

    def density_sum(self) -> Fraction:
        """Sum of 1/hi^2 - 1/lo^2 over the ratio pairs, exact."""
        total = Fraction(0)
        for lo, hi in self.interval_ratios:
            total += Fraction(1, hi * hi) - Fraction(1, lo * lo)
        return total


DEFAULT_ANNULI = AnnuliSpec()


def lower_bound_density(spec: AnnuliSpec = DEFAULT_ANNULI) -> Fraction:
    """Density of norms kept by the annular construction, exact.

    Each pair (lo, hi) contributes 1/hi^2 - 1/lo^2 because the count of
    Hurwitz integers with norm at most M grows like a constant times
    M^2, so the annulus (M/lo, M/hi] carries that share of the total in
    the large-M limit.
    """
    return spec.density_sum()


def upper_bound_density(terms: int | None = None) -> Fraction:
    """Upper bound for the density of a geometric-progression-free set.

    Each excluded region contributes 3/4 * 2**-(4 + 6i); with terms=None
    the full series is summed in closed form to 20/21.

    Args:
        terms: number of exclusion terms to apply, at least 1, or None
            for the limit of the full series.

    Raises:
        ValueError: if terms is given and is less than 1.
    """
    if terms is None:
        return Fraction(20, 21)
    if terms < 1:
        raise ValueError(f"terms must be positive, got {terms}")
    total = Fraction(1)
    for i in range(terms):
        total -= Fraction(3, 4) * Fraction(1, 2 ** (4 + 6 * i))
    return total


def verify_annuli_gp_free(max_norm: int, spec: AnnuliSpec = DEFAULT_ANNULI) -> bool:
    """Brute-force check that the kept norms contain no geometric triple.

    Scans every (n, n*k, n*k**2) with integer ratio k >= 2 and all three
    terms at most max_norm; returns False on the first triple whose
    members are all kept.  A set of norms with no such integer-ratio
    triple supports a progression-free set of quaternions, since any
    quaternion progression forces exactly this pattern on norms.

    Args:
        max_norm: top of the scanned range, at least 48 so the first
            nontrivial annuli are exercised.
        spec: annuli blueprint to test; pass a modified one to confirm
            the check really rejects bad blueprints.

    Raises:
        ValueError: if max_norm < 48.
    """
    if max_norm < 48:
        raise ValueError(f"max_norm must be at least 48, got {max_norm}")
    kept = [spec.contains(n, max_norm) for n in range(max_norm + 1)]
    for n in range(1, max_norm + 1):
        if not kept[n]:
            continue
        k = 2
        while n * k * k <= max_norm:
            if kept[n * k] and kept[n * k * k]:
                return False
            k += 1
    return True


def rankin_apfree_contains(n: int) -> bool:
    """Membership in the greedy progression-free set of nonnegative integers.

    The greedy set built over 0, 1, 2, ... avoiding three-term
    arithmetic progressions is exactly the integers with no digit 2 in
    base 3.

    Raises:
        ValueError: if n is negative.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    while n:
        if n % 3 == 2:
            return False
        n //= 3
    return True


def rankin_gpfree_contains(n: int) -> bool:
    """Whether every prime exponent of n lies in the greedy progression-free set.

    These are the Rankin integers: the greedy geometric-progression-free
    subset of the positive integers.

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            if not rankin_apfree_contains(e):
                return False
        f += 1 if f == 2 else 2
    return True


def rankin_quaternion_contains(q: HurwitzInt) -> bool:
    """Whether the norm of q is a Rankin integer.

    Raises:
        ValueError: if q is zero.
    """
    if q.is_zero():
        raise ValueError("zero quaternion has no norm class")
    return rankin_gpfree_contains(q.norm())


@dataclass(frozen=True)
class DensityEstimate:
    """A density value together with how it was truncated.

    truncation is "exact" for closed forms, else the pair (max_prime,
    max_exponent) that was used.  monotone_direction records the side
    from which the truncated value approaches the true one: "over" means
    the estimate only decreases as the truncation grows.
    """

    value: Fraction | Decimal
    truncation: tuple[int, int] | Literal["exact"]
    monotone_direction: Literal["under", "over", "exact"]

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ValueError(f"density {self.value} outside [0, 1]")


def _apfree_exponents(max_exponent: int) -> list[int]:
    return [n for n in range(max_exponent + 1) if rankin_apfree_contains(n)]


def rankin_even_factor(max_exponent: int) -> Fraction:
    """The p = 2 factor of the Rankin density product, exact.

    Sum of 3/4**(n+1) over allowed exponents n up to max_exponent.
    """
    return sum(
        (Fraction(3, 4 ** (n + 1)) for n in _apfree_exponents(max_exponent)),
        Fraction(0),
    )


def _primes_upto(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, limit + 1) if sieve[p]]


def rankin_density(max_prime: int = 10**6, max_exponent: int = 40) -> DensityEstimate:
    """Density of Hurwitz integers with Rankin norm, as a truncated Euler product.

    The factor for a prime p is the sum, over allowed exponents n, of
    the share of Hurwitz integers whose norm has p-adic valuation
    exactly n, so it matches summing proportion_exact_ppower(p, n) over
    allowed n.  Factors are evaluated as exact integer fractions and fed
    into a running 50-digit decimal product in ascending prime order, so
    the only rounding is one decimal division per prime.  Dropping
    primes above max_prime removes factors below 1, hence the truncated
    value approaches the true density from above as max_prime grows.

    Args:
        max_prime: largest odd prime kept, at least 3.
        max_exponent: largest exponent kept in each factor, at least 1.

    Raises:
        ValueError: on out-of-range truncation parameters.
    """
    if max_prime < 3:
        raise ValueError(f"max_prime must be at least 3, got {max_prime}")
    if max_exponent < 1:
        raise ValueError(f"max_exponent must be at least 1, got {max_exponent}")
    exponents = _apfree_exponents(max_exponent)
    top = exponents[-1]
    even = rankin_even_factor(max_exponent)
    with decimal.localcontext() as ctx:
        ctx.prec = 50
        product = Decimal(even.numerator) / Decimal(even.denominator)
        for p in _primes_upto(max_prime):
            if p == 2:
                continue
            # Factor = sum over allowed n of p**-n - (p+1) * p**-(2n+2),
            # cleared to the common denominator p**(2*top+2).
            powers = [1] * (2 * top + 3)
            for e in range(1, 2 * top + 3):
                powers[e] = powers[e - 1] * p
            num = 0
            for n in exponents:
                num += powers[2 * top + 2 - n] - (p + 1) * powers[2 * (top - n)]
            product *= Decimal(num) / Decimal(powers[2 * top + 2])
        value = +product
    return DensityEstimate(
        value=value, truncation=(max_prime, max_exponent), monotone_direction="over"
    )
