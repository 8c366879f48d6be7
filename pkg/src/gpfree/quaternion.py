"""Exact arithmetic in the Hurwitz quaternion order.

A Hurwitz integer is a quaternion a + bi + cj + dk whose coordinates are
either all rational integers or all halves of odd integers.  Storing the
doubled coordinates (2a, 2b, 2c, 2d) keeps every computation in plain
Python integers: the four stored values share a single parity, products
of two elements have doubled coordinates divisible by 2 after expansion,
and the reduced norm (a^2 + b^2 + c^2 + d^2) is always an exact integer.
Nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "HurwitzInt",
    "ModelledFactorization",
    "ONE",
    "enumerate_norm",
    "factor_modelled",
    "is_gp_triple",
    "is_prime",
    "left_divide",
    "units",
]


class HurwitzInt:
    """A Hurwitz integer held as four doubled coordinates of equal parity.

    ``HurwitzInt(da, db, dc, dd)`` represents (da + db*i + dc*j + dd*k)/2.
    Use :meth:`from_integers` for elements with integer coordinates.
    Instances are immutable in practice (nothing mutates the slots) and
    hash by coordinate tuple, so they can live in sets and dict keys.
    """

    __slots__ = ("da", "db", "dc", "dd")

    def __init__(self, da: int, db: int, dc: int, dd: int):
        if (da ^ db) & 1 or (da ^ dc) & 1 or (da ^ dd) & 1:
            raise ValueError(
                f"doubled coordinates must share one parity, got {(da, db, dc, dd)}"
            )
        self.da = da
        self.db = db
        self.dc = dc
        self.dd = dd

    @classmethod
    def from_integers(cls, a: int, b: int, c: int, d: int) -> "HurwitzInt":
        """Build the element a + bi + cj + dk with integer coordinates."""
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @property
    def coords(self) -> tuple[int, int, int, int]:
        """Doubled coordinates as a tuple, the canonical sort/hash key."""
        return (self.da, self.db, self.dc, self.dd)

    def norm(self) -> int:
        """Reduced norm a^2 + b^2 + c^2 + d^2, exact."""
        da, db, dc, dd = self.da, self.db, self.dc, self.dd
        return (da * da + db * db + dc * dc + dd * dd) // 4

    def conjugate(self) -> "HurwitzInt":
        return HurwitzInt(self.da, -self.db, -self.dc, -self.dd)

    def is_zero(self) -> bool:
        return self.da == 0 and self.db == 0 and self.dc == 0 and self.dd == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __mul__(self, other: "HurwitzInt") -> "HurwitzInt":
        if not isinstance(other, HurwitzInt):
            return NotImplemented
        a1, b1, c1, d1 = self.da, self.db, self.dc, self.dd
        a2, b2, c2, d2 = other.da, other.db, other.dc, other.dd
        # Products of doubled coordinates carry a factor 4; one factor 2
        # stays in the result's doubled coordinates, the other divides out.
        return HurwitzInt(
            (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2) // 2,
            (a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2) // 2,
            (a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2) // 2,
            (a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2) // 2,
        )

    def __neg__(self) -> "HurwitzInt":
        return HurwitzInt(-self.da, -self.db, -self.dc, -self.dd)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HurwitzInt):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        return f"({self.da},{self.db},{self.dc},{self.dd})/2"

    def __repr__(self) -> str:
        return f"HurwitzInt({self.da}, {self.db}, {self.dc}, {self.dd})"


ONE = HurwitzInt.from_integers(1, 0, 0, 0)
ZERO = HurwitzInt.from_integers(0, 0, 0, 0)


def _build_units() -> tuple[HurwitzInt, ...]:
    found = []
    for da in (-2, -1, 0, 1, 2):
        for db in (-2, -1, 0, 1, 2):
            for dc in (-2, -1, 0, 1, 2):
                for dd in (-2, -1, 0, 1, 2):
                    if (da ^ db) & 1 or (da ^ dc) & 1 or (da ^ dd) & 1:
                        continue
                    if da * da + db * db + dc * dc + dd * dd == 4:
                        found.append(HurwitzInt(da, db, dc, dd))
    found.sort(key=lambda q: q.coords)
    return tuple(found)


_UNITS = _build_units()


def units() -> tuple[HurwitzInt, ...]:
    """The 24 units of the order, in lexicographic coordinate order.

    Eight elements with a single coordinate equal to +-1 and sixteen of
    the form (+-1 +- i +- j +- k)/2.
    """
    return _UNITS


# Two-square decomposition tables drive norm-class enumeration.  For a
# target doubled-norm 4N we split 4N = m1 + m2 and glue a pair with
# u^2 + v^2 = m1 onto a pair with s^2 + t^2 = m2.  Parity bookkeeping:
# both members of a two-square pair are even iff the sum is 0 mod 4 and
# both odd iff it is 2 mod 4, so drawing m1 and m2 from the same residue
# class mod 4 enforces the shared-parity constraint for free.
_pair_even: list[list[tuple[int, int]]] = [[] for _ in range(1)]
_pair_odd: list[list[tuple[int, int]]] = [[] for _ in range(1)]


def _extend_pair_tables(limit: int) -> None:
    have = len(_pair_even) - 1
    if limit <= have:
        return
    # Round up so repeated slightly-larger requests do not rebuild.
    limit = max(limit, 2 * have, 1024)
    even = [[] for _ in range(limit + 1)]
    odd = [[] for _ in range(limit + 1)]
    top = math.isqrt(limit)
    for u in range(-top, top + 1):
        uu = u * u
        for v in range(-top, top + 1):
            m = uu + v * v
            if m > limit:
                continue
            if (u ^ v) & 1:
                continue
            (odd if u & 1 else even)[m].append((u, v))
    _pair_even[:] = even
    _pair_odd[:] = odd


def enumerate_norm(norm: int) -> list[HurwitzInt]:
    """All Hurwitz integers of the given reduced norm, sorted by coords.

    Args:
        norm: target reduced norm, at least 1.

    Returns:
        The full norm class in lexicographic doubled-coordinate order;
        its length always matches the odd-divisor-sum count formula.

    Raises:
        ValueError: if norm < 1.
    """
    if norm < 1:
        raise ValueError(f"norm must be positive, got {norm}")
    target = 4 * norm
    _extend_pair_tables(target)
    out = []
    for m1 in range(0, target + 1, 2):
        m2 = target - m1
        if m1 & 3 == m2 & 3:
            table = _pair_even if m1 & 3 == 0 else _pair_odd
            for da, db in table[m1]:
                for dc, dd in table[m2]:
                    out.append(HurwitzInt(da, db, dc, dd))
    out.sort(key=lambda q: q.coords)
    return out


def left_divide(a: HurwitzInt, b: HurwitzInt) -> HurwitzInt | None:
    """Exact left quotient: the r with a * r == b, if one exists.

    Over the rational quaternions r = conj(a) * b / norm(a) is the only
    candidate, so divisibility reduces to an integrality test on it.

    Args:
        a: left divisor, must be nonzero.
        b: dividend.

    Returns:
        The unique r with a * r == b, or None when a does not left
        divide b.

    Raises:
        ZeroDivisionError: if a is zero.
    """
    n = a.norm()
    if n == 0:
        raise ZeroDivisionError("left division by zero quaternion")
    prod = a.conjugate() * b
    da, db, dc, dd = prod.coords
    if da % n or db % n or dc % n or dd % n:
        return None
    da, db, dc, dd = da // n, db // n, dc // n, dd // n
    if (da ^ db) & 1 or (da ^ dc) & 1 or (da ^ dd) & 1:
        return None
    return HurwitzInt(da, db, dc, dd)


def _is_rational_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime(q: HurwitzInt) -> bool:
    """Whether q is prime in the order: exactly when its norm is prime."""
    return _is_rational_prime(q.norm())


@dataclass(frozen=True)
class ModelledFactorization:
    """A factorization of a Hurwitz integer following a fixed norm model.

    ``factors[i]`` has reduced norm ``prime_norms[i]`` and the ordered
    product of the factors reproduces the original element exactly.
    """

    prime_norms: tuple[int, ...]
    factors: tuple[HurwitzInt, ...]

    def product(self) -> HurwitzInt:
        acc = ONE
        for f in self.factors:
            acc = acc * f
        return acc


def factor_modelled(q: HurwitzInt, prime_norms) -> ModelledFactorization:
    """Factor q into primes whose norms follow the given ordered model.

    Works by successive extraction: for each modelled norm p, scan the
    norm-p class in lexicographic order and take the first element that
    left divides what remains.  Such an element always exists when the
    model multiplies to norm(q).  The unit left over at the end is
    absorbed into the last factor, which keeps its norm.

    Args:
        q: nonzero element to factor.
        prime_norms: ordered rational primes multiplying to norm(q).

    Returns:
        A ModelledFactorization whose factor product equals q.

    Raises:
        ValueError: if q is zero, a modelled norm is not prime, or the
            model does not multiply to norm(q).
    """
    if q.is_zero():
        raise ValueError("cannot factor the zero quaternion")
    model = tuple(prime_norms)
    for p in model:
        if not _is_rational_prime(p):
            raise ValueError(f"modelled norm {p} is not prime")
    if math.prod(model) != q.norm():
        raise ValueError(
            f"model {model} multiplies to {math.prod(model)}, norm is {q.norm()}"
        )
    if not model:
        if q == ONE:
            return ModelledFactorization((), ())
        raise ValueError("empty model only factors the identity")
    factors = []
    rest = q
    for p in model:
        for cand in enumerate_norm(p):
            quot = left_divide(cand, rest)
            if quot is not None:
                factors.append(cand)
                rest = quot
                break
        else:
            raise AssertionError(f"no norm-{p} left factor of {rest}; model {model}")
    assert rest.is_unit()
    factors[-1] = factors[-1] * rest
    result = ModelledFactorization(model, tuple(factors))
    assert result.product() == q
    return result


def is_gp_triple(a: HurwitzInt, b: HurwitzInt, c: HurwitzInt) -> bool:
    """Whether (a, b, c) is a geometric progression with a non-unit ratio.

    True exactly when some r of norm at least 2 satisfies a * r == b and
    b * r == c.  For nonzero a the only candidate ratio is the exact
    left quotient of b by a, so no search is needed.
    """
    if a.is_zero():
        # 0 * r == 0 for every r, so any ratio of norm >= 2 works.
        return b.is_zero() and c.is_zero()
    r = left_divide(a, b)
    if r is None or r.norm() < 2:
        return False
    return b * r == c
