"""Greedy geometric-progression-free set of Hurwitz integers.

Processing all elements in order of increasing norm (lexicographic
within a norm), an element is kept unless it completes a three-term
progression a, a*r, a*r*r with non-unit ratio whose earlier terms were
both kept.  Since norms in such a progression grow strictly, only the
candidate-as-last-term case can ever fire, which the builder exploits
and asserts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .counting import count_norm_exact
from .quaternion import HurwitzInt, enumerate_norm, units

__all__ = [
    "GreedyReport",
    "build_greedy",
    "greatest_odd_divisor",
    "is_unit_square_representable",
    "square_norm_gap",
]


@dataclass(frozen=True)
class GreedyReport:
    """Outcome of a greedy run up to max_norm.

    included holds the kept elements in processing order.  excluded
    pairs each rejected element with the witness (a, b, r) such that
    a, a*r == b are kept and b*r is the rejected element.
    """

    max_norm: int
    included: tuple[HurwitzInt, ...]
    excluded: tuple[tuple[HurwitzInt, tuple[HurwitzInt, HurwitzInt, HurwitzInt]], ...]

    def included_coords(self) -> frozenset[tuple[int, int, int, int]]:
        return frozenset(q.coords for q in self.included)


def _right_quotient(b: HurwitzInt, a: HurwitzInt) -> HurwitzInt | None:
    """The q with q * a == b, if it is integral."""
    n = a.norm()
    prod = b * a.conjugate()
    da, db, dc, dd = prod.coords
    if da % n or db % n or dc % n or dd % n:
        return None
    da, db, dc, dd = da // n, db // n, dc // n, dd // n
    if (da ^ db) & 1 or (da ^ dc) & 1 or (da ^ dd) & 1:
        return None
    return HurwitzInt(da, db, dc, dd)


def build_greedy(max_norm: int, rng: random.Random | None = None) -> GreedyReport:
    """Run the greedy progression-free selection over norms 1..max_norm.

    A candidate c of norm N is rejected exactly when N = s * t * t for
    some integer t >= 2 and there is a ratio r of norm t with
    c = (a * r) * r for kept elements a and a * r.  The builder scans
    the finitely many (s, t) splits of N and the norm-t ratio classes,
    recovering a by exact right division.  Witness norms s and s * t are
    strictly below N, so decisions within one norm are independent of
    each other; passing an rng shuffles the within-norm processing
    order, which must not change the outcome.

    Args:
        max_norm: largest norm processed, at least 1.
        rng: optional shuffler for the within-norm candidate order.

    Raises:
        ValueError: if max_norm < 1.
    """
    if max_norm < 1:
        raise ValueError(f"max_norm must be positive, got {max_norm}")
    included: list[HurwitzInt] = []
    excluded = []
    kept = set()
    ratio_classes: dict[int, list[HurwitzInt]] = {}
    for n in range(1, max_norm + 1):
        candidates = enumerate_norm(n)
        if rng is not None:
            candidates = list(candidates)
            rng.shuffle(candidates)
        splits = []
        for t in range(2, math.isqrt(n) + 1):
            if n % (t * t) == 0:
                if t not in ratio_classes:
                    ratio_classes[t] = enumerate_norm(t)
                splits.append((n // (t * t), t))
        for c in candidates:
            witness = None
            for s, t in splits:
                tt = t * t
                for r in ratio_classes[t]:
                    a = _right_quotient(c, r * r)
                    if a is None:
                        continue
                    b = a * r
                    if a.coords in kept and b.coords in kept:
                        assert s * t < n
                        witness = (a, b, r)
                        break
                if witness:
                    break
            if witness is None:
                included.append(c)
                kept.add(c.coords)
            else:
                excluded.append((c, witness))
    return GreedyReport(max_norm, tuple(included), tuple(excluded))


def is_unit_square_representable(q: HurwitzInt) -> tuple[HurwitzInt, HurwitzInt] | None:
    """Search for a unit u and element r with q == u * r * r.

    The norm of q must be a perfect square m * m; candidate r then runs
    over the norm-m class and u over the 24 units.

    Args:
        q: nonzero element whose norm is a perfect square.

    Returns:
        A pair (u, r) with q == u * r * r, or None if no such pair
        exists.

    Raises:
        ValueError: if q is zero or its norm is not a perfect square.
    """
    if q.is_zero():
        raise ValueError("zero quaternion not supported")
    n = q.norm()
    m = math.isqrt(n)
    if m * m != n:
        raise ValueError(f"norm {n} is not a perfect square")
    for r in enumerate_norm(m):
        rr = r * r
        for u in units():
            if u * rr == q:
                return (u, r)
    return None


def square_norm_gap(n: int) -> tuple[int, int, bool]:
    """Compare 24 times the norm-n count against the norm-n*n count.

    Returns (24 * count_norm_exact(n), count_norm_exact(n * n), holds)
    where holds means the strict inequality lhs < rhs.  The inequality
    holds exactly when the greatest odd divisor of n exceeds 23, which
    is what makes unit-times-square representations fail often enough
    for the greedy set to stay large.

    Raises:
        ValueError: if n < 1.
    """
    lhs = 24 * count_norm_exact(n)
    rhs = count_norm_exact(n * n)
    return (lhs, rhs, lhs < rhs)


def greatest_odd_divisor(n: int) -> int:
    """Largest odd divisor of n (n >= 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    while n % 2 == 0:
        n //= 2
    return n
