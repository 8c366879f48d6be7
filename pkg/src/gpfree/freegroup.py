"""Progression-free subsets of the free product of two order-2 generators.

Reduced words over generators x, y with x*x == y*y == identity are
alternating strings, so a word is determined by its leading letter and
its length.  Enumerating words by length with x before y at each length
gives the order identity, x, y, xy, yx, xyx, yxy, ...; the greedy
geometric-progression-free subset in that order turns out to consist of
even-length words only, and pulling it back through the isomorphism
(xy)**k -> k onto the integers in the order 0, 1, -1, 2, -2, ... it has
a clean base-3 digit description with an explicit arithmetic
progression witnessing every exclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "IDENTITY",
    "Word",
    "alt_order_index",
    "alt_order_value",
    "even_word_to_int",
    "greedy_set_bruteforce",
    "greedy_set_contains",
    "greedy_set_density",
    "greedy_words_bruteforce",
    "greedy_words_density",
    "index_of",
    "int_to_even_word",
    "ternary",
    "witness_progression",
    "word_at",
    "word_mul",
]


_OTHER = {"x": "y", "y": "x"}


@dataclass(frozen=True, slots=True)
class Word:
    """A reduced word: alternating letters, named by leading letter and length.

    The identity is Word(None, 0).
    """

    leading: str | None
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if (self.length == 0) != (self.leading is None):
            raise ValueError(f"leading {self.leading!r} inconsistent with length {self.length}")
        if self.leading is not None and self.leading not in _OTHER:
            raise ValueError(f"leading letter must be 'x' or 'y', got {self.leading!r}")

    @property
    def last(self) -> str | None:
        """Final letter: the leading one for odd length, the other for even."""
        if self.length == 0:
            return None
        return self.leading if self.length % 2 else _OTHER[self.leading]

    def inverse(self) -> "Word":
        # An odd word is a palindrome, hence its own inverse; an even
        # word reverses to the same length led by the other letter.
        if self.length % 2 or self.length == 0:
            return self
        return Word(_OTHER[self.leading], self.length)

    def __str__(self) -> str:
        if self.length == 0:
            return "I"
        a, b = self.leading, _OTHER[self.leading]
        return (a + b) * (self.length // 2) + a * (self.length % 2)


IDENTITY = Word(None, 0)


def word_mul(u: Word, v: Word) -> Word:
    """Product in the group, with full cancellation at the seam.

    When the last letter of u equals the first of v, a block of length
    2 * min(len(u), len(v)) cancels; the survivor keeps its leading
    letter if u was longer, and flips it once per cancelled letter of u
    otherwise.
    """
    if u.length == 0:
        return v
    if v.length == 0:
        return u
    if u.last != v.leading:
        return Word(u.leading, u.length + v.length)
    if u.length > v.length:
        return Word(u.leading, u.length - v.length)
    if u.length < v.length:
        lead = v.leading if u.length % 2 == 0 else _OTHER[v.leading]
        return Word(lead, v.length - u.length)
    return IDENTITY


def word_at(n: int) -> Word:
    """The n-th word (1-based) in the length-then-leading-letter order.

    Order: I, x, y, xy, yx, xyx, yxy, ...

    Raises:
        ValueError: if n < 1.
    """
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    if n == 1:
        return IDENTITY
    return Word("x" if n % 2 == 0 else "y", n // 2)


def index_of(w: Word) -> int:
    """Position of w in the enumeration order; inverse of word_at."""
    if w.length == 0:
        return 1
    return 2 * w.length + (0 if w.leading == "x" else 1)


def even_word_to_int(w: Word) -> int:
    """Image of an even-length word under (xy)**k -> k.

    Raises:
        ValueError: if the word has odd length.
    """
    if w.length % 2:
        raise ValueError(f"word {w} has odd length")
    if w.length == 0:
        return 0
    k = w.length // 2
    return k if w.leading == "x" else -k


def int_to_even_word(k: int) -> Word:
    """Inverse of even_word_to_int."""
    if k == 0:
        return IDENTITY
    return Word("x" if k > 0 else "y", 2 * abs(k))


def alt_order_index(k: int) -> int:
    """Position (1-based) of k in the order 0, 1, -1, 2, -2, ..."""
    if k == 0:
        return 1
    return 2 * k if k > 0 else 2 * -k + 1


def alt_order_value(n: int) -> int:
    """The n-th integer in the order 0, 1, -1, 2, -2, ...; inverse of alt_order_index."""
    if n < 1:
        raise ValueError(f"index must be at least 1, got {n}")
    if n == 1:
        return 0
    return n // 2 if n % 2 == 0 else -(n // 2)


def _digits(m: int) -> list[int]:
    """Base-3 digits of m >= 0, least significant first; empty for 0."""
    out = []
    while m:
        out.append(m % 3)
        m //= 3
    return out


def ternary(n: int) -> str:
    """Base-3 rendering, most significant digit first, '-' for negatives."""
    if n == 0:
        return "0"
    ds = _digits(abs(n))
    body = "".join(str(d) for d in reversed(ds))
    return "-" + body if n < 0 else body


def greedy_set_contains(n: int) -> bool:
    """Membership in the greedy progression-free set over 0, 1, -1, 2, -2, ...

    A positive member has exactly one base-3 digit 1 with only zeros
    below it; a negative member has no digit 1 at all in |n|.  Zero is a
    member.
    """
    if n == 0:
        return True
    if n > 0:
        while n % 3 == 0:
            n //= 3
        if n % 3 != 1:
            return False
        n //= 3
        while n:
            if n % 3 == 1:
                return False
            n //= 3
        return True
    m = -n
    while m:
        if m % 3 == 1:
            return False
        m //= 3
    return True


def greedy_set_bruteforce(max_abs: int) -> set[int]:
    """Greedy three-term-progression-free subset of [-max_abs, max_abs].

    Processes integers in the order 0, 1, -1, 2, -2, ... and keeps each
    one unless it would complete an arithmetic progression of three
    distinct terms with two kept integers, in any of the three
    positions.
    """
    if max_abs < 0:
        raise ValueError(f"max_abs must be nonnegative, got {max_abs}")
    chosen: set[int] = set()
    for idx in range(1, 2 * max_abs + 2):
        z = alt_order_value(idx)
        if not _completes_ap(z, chosen):
            chosen.add(z)
    return chosen


def _completes_ap(z: int, chosen: set[int]) -> bool:
    for b in chosen:
        # z as an endpoint with middle term b: the far end is 2b - z.
        if b != z and 2 * b - z in chosen:
            return True
    for a in chosen:
        # z as the middle term.
        if a != z and 2 * z - a in chosen:
            return True
    return False


def greedy_words_bruteforce(max_len: int) -> set[Word]:
    """Greedy geometric-progression-free set of words up to a length bound.

    Words are processed in enumeration order; w is kept unless some
    progression a, a*r, a*r*r with r != I has w as one of its terms and
    all terms in the kept set plus w itself.  Ratios are recovered by
    division, so terms of any length can appear, but both partner terms
    must already be kept (or coincide with w).
    """
    if max_len < 0:
        raise ValueError(f"max_len must be nonnegative, got {max_len}")
    chosen: set[Word] = set()
    idx = 1
    while True:
        w = word_at(idx)
        idx += 1
        if w.length > max_len:
            break
        if not _completes_gp(w, chosen):
            chosen.add(w)
    return chosen


def _completes_gp(w: Word, chosen: set[Word]) -> bool:
    winv = w.inverse()
    pool = chosen | {w}
    for b in pool:
        binv = b.inverse()
        # w last: progression (b * r**-1, b, w) with r = b**-1 * w.
        r = word_mul(binv, w)
        if r.length and word_mul(b, r.inverse()) in pool:
            return True
        # w middle: progression (b, w, w * r) with r = b**-1 * w.
        if r.length and word_mul(w, r) in pool:
            return True
        # w first: progression (w, b, b * r) with r = w**-1 * b.
        r = word_mul(winv, b)
        if r.length and word_mul(b, r) in pool:
            return True
    return False


def greedy_words_density(n: int) -> Fraction:
    """Share of words of length at most 2 * 3**n kept by the greedy rule.

    Exactly 2**(n+1) of the 1 + 4 * 3**n words survive.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(2 ** (n + 1), 1 + 4 * 3**n)


def greedy_set_density(n: int) -> Fraction:
    """Share of integers in [-3**n, 3**n] kept by the greedy rule.

    Exactly 2**(n+1) of the 1 + 2 * 3**n integers survive.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(2 ** (n + 1), 1 + 2 * 3**n)


def _ones_places(digits: list[int]) -> list[int]:
    """1-based places of the digit 1, ascending."""
    return [i + 1 for i, d in enumerate(digits) if d == 1]


def _from_places(ones: set[int], twos: set[int]) -> int:
    total = 0
    for i in ones:
        total += 3 ** (i - 1)
    for i in twos:
        total += 2 * 3 ** (i - 1)
    return total


def witness_progression(n: int) -> tuple[int, int, int] | None:
    """An arithmetic progression certifying that n was rejected by the greedy.

    For n outside the greedy set, returns (a, b, r) with a and b in the
    set, both preceding n in the processing order, and b - a == n - b
    == r != 0, so (a, b, n) is the progression that blocked n.  Returns
    None for members.

    The construction works on base-3 digits.  Writing i_1 < i_2 < ...
    for the places of the digit 1, the blocked midpoint b keeps a digit
    1 only at i_1 (positive n) and otherwise uses digits 0 and 2 chosen
    pairwise along the 1-places; adjustments for an all-{0,2} prefix
    above the leading 1 and for trailing zeros are linear.
    """
    if greedy_set_contains(n):
        return None
    if n > 0:
        a, b = _positive_witness(n)
    else:
        a, b = _negative_witness(n)
    r = n - b
    assert b - a == r != 0, (n, a, b)
    assert greedy_set_contains(a) and greedy_set_contains(b), (n, a, b)
    assert abs(a) <= abs(n) and abs(b) < abs(n), (n, a, b)
    return (a, b, r)


def _positive_witness(n: int) -> tuple[int, int]:
    scale = 1
    core = n
    while core % 3 == 0:
        core //= 3
        scale *= 3
    digits = _digits(core)
    ones = _ones_places(digits)
    if not ones:
        # Last digit is 2: lowering it to 1 gives the blocking ratio.
        ratio = core - 1
        return (scale * (core - 2 * ratio), scale * (core - ratio))
    # Split off the {0,2} prefix above the topmost 1; it shifts the
    # endpoint and the ratio but never the digit pattern below.
    k = ones[-1]
    m = core % 3**k
    shift = core - m
    mdigits = digits[:k]
    mones = _ones_places(mdigits)
    if len(mones) % 2:
        b = _odd_core_midpoint(mdigits, mones)
        a, b = 2 * b - m + shift, b + shift
    else:
        b = _even_core_midpoint(mdigits, mones)
        a = 2 * b - m - shift
    return (scale * a, scale * b)


def _odd_core_midpoint(digits: list[int], ones: list[int]) -> int:
    """Midpoint digits for a core with an odd number of 1-places.

    Keep the lowest 1; above it, place a 2 wherever the core has a 2
    and across each interval [i_{2q}, i_{2q+1}).
    """
    first = ones[0]
    twos = {i + 1 for i, d in enumerate(digits) if d == 2 and i + 1 > first}
    for q in range(1, len(ones), 2):
        twos.update(range(ones[q], ones[q + 1]))
    return _from_places({first}, twos)


def _even_core_midpoint(digits: list[int], ones: list[int]) -> int:
    """Midpoint digits for a core with an even number of 1-places.

    Keep the lowest 1; place a 2 on every second upper 1-place i_3,
    i_5, ... and wherever the core has a 2 strictly inside a pair
    interval (i_{2q-1}, i_{2q}).
    """
    first = ones[0]
    twos = set(ones[2::2])
    for q in range(0, len(ones), 2):
        lo, hi = ones[q], ones[q + 1]
        twos.update(i + 1 for i, d in enumerate(digits) if d == 2 and lo < i + 1 < hi)
    return _from_places({first}, twos)


def _negative_witness(n: int) -> tuple[int, int]:
    digits = _digits(-n)
    ones = _ones_places(digits)
    if len(ones) % 2 == 0:
        # All core 2s survive; each pair interval [i_{2q-1}, i_{2q})
        # fills with 2s.
        twos = {i + 1 for i, d in enumerate(digits) if d == 2}
        for q in range(0, len(ones), 2):
            twos.update(range(ones[q], ones[q + 1]))
    else:
        # The 1-places above i_1 pair as (i_2, i_3), (i_4, i_5), ...;
        # inside each pair interval every nonzero digit place is taken,
        # and borrow chains sweep the zero gaps.  Any 2 below i_1 is
        # taken as well, the lowest becoming the surviving 1 of the far
        # endpoint; with no such 2 the place i_1 itself survives.
        twos = {i + 1 for i, d in enumerate(digits) if d == 2 and i + 1 < ones[0]}
        for q in range(1, len(ones), 2):
            lo, hi = ones[q], ones[q + 1]
            twos.update(p for p in range(lo, hi) if digits[p - 1] != 0)
    b = -_from_places(set(), twos)
    return (2 * b - n, b)
