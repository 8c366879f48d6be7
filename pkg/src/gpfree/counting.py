"""Counting Hurwitz integers by reduced norm.

The number of elements of norm N is 24 times the sum of the odd
divisors of N.  Everything in this module is exact integer or rational
arithmetic built on that formula; the lattice enumeration that confirms
it lives in :mod:`gpfree.quaternion`.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "NormCount",
    "count_norm_exact",
    "count_upto",
    "odd_divisor_sum",
    "proportion_exact_ppower",
]


def odd_divisor_sum(n: int) -> int:
    """Sum of the odd divisors of n (n >= 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    while n % 2 == 0:
        n //= 2
    total = 1
    f = 3
    while f * f <= n:
        if n % f == 0:
            power = 1
            part = 1
            while n % f == 0:
                n //= f
                power *= f
                part += power
            total *= part
        f += 2
    if n > 1:
        total *= 1 + n
    return total


def count_norm_exact(norm: int) -> int:
    """Number of Hurwitz integers of the given reduced norm.

    Raises:
        ValueError: if norm < 1.
    """
    return 24 * odd_divisor_sum(norm)


def count_upto(max_norm: int) -> int:
    """Number of nonzero Hurwitz integers with norm at most max_norm.

    Summing the odd-divisor counts directly would cost a divisor sum per
    norm; swapping the order of summation instead groups by cofactor m
    and sums the odd numbers up to max_norm // m, which is a square.
    Runs in O(max_norm) integer operations.
    """
    if max_norm < 0:
        raise ValueError(f"max_norm must be nonnegative, got {max_norm}")
    total = 0
    for m in range(1, max_norm + 1):
        k = (max_norm // m + 1) // 2
        total += k * k
    return 24 * total


def _odd_divisor_sums_upto(max_norm: int) -> list[int]:
    """Sieve of odd divisor sums for 1..max_norm (index 0 unused)."""
    sums = [0] * (max_norm + 1)
    for d in range(1, max_norm + 1, 2):
        for multiple in range(d, max_norm + 1, d):
            sums[multiple] += d
    return sums


@dataclass(frozen=True)
class NormCount:
    """Per-norm and cumulative counts for all norms up to a bound."""

    max_norm: int
    per_norm: dict[int, int]
    cumulative: dict[int, int]

    @classmethod
    def build(cls, max_norm: int) -> "NormCount":
        """Tabulate counts for 1..max_norm with a divisor sieve."""
        if max_norm < 1:
            raise ValueError(f"max_norm must be positive, got {max_norm}")
        sums = _odd_divisor_sums_upto(max_norm)
        per_norm = {}
        cumulative = {}
        running = 0
        for n in range(1, max_norm + 1):
            c = 24 * sums[n]
            running += c
            per_norm[n] = c
            cumulative[n] = running
        return cls(max_norm, per_norm, cumulative)

    def write_csv(self, stream) -> None:
        """Write rows norm,count,cumulative to a text stream."""
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["norm", "count", "cumulative"])
        for n in range(1, self.max_norm + 1):
            writer.writerow([n, self.per_norm[n], self.cumulative[n]])


def proportion_exact_ppower(p: int, n: int) -> Fraction:
    """Asymptotic share of Hurwitz integers whose norm has p-adic valuation n.

    Exact rational value of the density of elements with p**n dividing
    the norm but p**(n+1) not.  The shares over all n sum to 1 for any
    fixed prime p.

    Args:
        p: a rational prime.
        n: valuation, n >= 0.

    Raises:
        ValueError: if p is not prime or n is negative.
    """
    from .quaternion import _is_rational_prime

    if not _is_rational_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 0:
        raise ValueError(f"valuation must be nonnegative, got {n}")
    if p == 2:
        return Fraction(3, 4 ** (n + 1))
    num = p ** (n + 3) - p ** (n + 2) - p * p + 1
    den = (p - 1) * p * p * p ** (2 * n)
    return Fraction(num, den)
