"""Good, oddly-good and evenly-good integers.

A positive integer l is *good* for coprime nonzero (a, b) when l divides
a^k + b^k for some k >= 1; *oddly-good* / *evenly-good* when such a k can be
taken odd / even.  For l > 2 the two subclasses are disjoint, while 1 (and 2,
when ab is odd) lies in both.

Two independent routes are provided:

* :func:`classify` decides membership from the multiplicative orders of a/b
  modulo the prime divisors of l and modulo the 2-part of l;
* :func:`brute_force_classify` only scans exponents.

Why the scan bound ``max(2, 2 * carmichael(l))`` suffices: with gcd(ab, l) = 1
the witnesses are exactly the k with (a/b)^k = -1 (mod l), which form a single
residue class k = ord/2 (mod ord) where ord = ord_l(a/b) divides lambda(l).
All witnesses share one parity once l > 2, and the smallest is ord/2.  When
gcd(ab, l) > 1 and l > 1 there is no witness at all.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .arith import carmichael, factorize, mult_order_ratio, two_adic_split, v2


class GoodClass(str, enum.Enum):
    BAD = "bad"
    ODDLY_GOOD = "oddly-good"
    EVENLY_GOOD = "evenly-good"
    BOTH = "both"

    @property
    def is_good(self) -> bool:
        return self is not GoodClass.BAD

    @property
    def is_oddly_good(self) -> bool:
        return self in (GoodClass.ODDLY_GOOD, GoodClass.BOTH)

    @property
    def is_evenly_good(self) -> bool:
        return self in (GoodClass.EVENLY_GOOD, GoodClass.BOTH)


class Parity(str, enum.Enum):
    ANY = "any"
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class GoodnessQuery:
    a: int
    b: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("a and b must be nonzero")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"a={self.a} and b={self.b} are not coprime")
        if self.l < 1:
            raise ValueError(f"l must be positive, got {self.l}")


@dataclass(frozen=True)
class GoodnessVerdict:
    cls: GoodClass
    witness_odd: int | None = None
    witness_even: int | None = None
    order_ratio: int | None = None

    @property
    def witness(self) -> int | None:
        """Smallest witness of either parity."""
        ks = [k for k in (self.witness_odd, self.witness_even) if k is not None]
        return min(ks) if ks else None


@dataclass(frozen=True)
class NecessaryProfile:
    """Order data forced on a good l = 2^beta * d.

    ``s`` is the common 2-adic valuation of ord_p(a/b) over the primes p | d
    (None when d = 1).  ``beta_range`` is the admissible closed interval for
    beta, where an upper end of None means unbounded (only when a + b = 0).
    """

    s: int | None
    beta: int
    gamma: int | None
    beta_range: tuple[int, int | None]
    v2_order: int


def _scan(a: int, b: int, l: int, want_odd: bool, want_even: bool) -> tuple[int | None, int | None]:
    # Walks k = 1, 2, ... keeping a^k, b^k mod l; stops early once the pair
    # returns to (1, 1) at an even k since everything afterwards repeats.
    bound = max(2, 2 * carmichael(l))
    x0, y0 = a % l, b % l
    x, y = 1 % l, 1 % l
    one = 1 % l
    odd = even = None
    for k in range(1, bound + 1):
        x = x * x0 % l
        y = y * y0 % l
        if (x + y) % l == 0:
            if k & 1:
                if odd is None:
                    odd = k
            elif even is None:
                even = k
        if (odd is not None or not want_odd) and (even is not None or not want_even):
            break
        if not k & 1 and x == one and y == one:
            break
    return odd, even


def witness_search(a: int, b: int, l: int, parity: Parity | str = Parity.ANY) -> int | None:
    """Smallest k >= 1 of the requested parity with l | a^k + b^k, or None."""
    GoodnessQuery(a, b, l)
    parity = Parity(parity)
    odd, even = _scan(a, b, l, parity is not Parity.EVEN, parity is not Parity.ODD)
    if parity is Parity.ODD:
        return odd
    if parity is Parity.EVEN:
        return even
    found = [k for k in (odd, even) if k is not None]
    return min(found) if found else None


def _verdict_from_witnesses(a, b, l, odd, even) -> GoodnessVerdict:
    order = mult_order_ratio(a, b, l) if gcd(a * b, l) == 1 else None
    if odd is not None and even is not None:
        return GoodnessVerdict(GoodClass.BOTH, odd, even, order)
    if odd is not None:
        return GoodnessVerdict(GoodClass.ODDLY_GOOD, odd, None, order)
    if even is not None:
        return GoodnessVerdict(GoodClass.EVENLY_GOOD, None, even, order)
    return GoodnessVerdict(GoodClass.BAD, None, None, order)


def brute_force_classify(a: int, b: int, l: int) -> GoodnessVerdict:
    """Verdict from exponent scanning alone."""
    GoodnessQuery(a, b, l)
    odd, even = _scan(a, b, l, True, True)
    return _verdict_from_witnesses(a, b, l, odd, even)


def odd_part_valuation(a: int, b: int, d: int) -> int | None:
    """Common v2(ord_p(a/b)) over primes p | d, or None if they disagree.

    ``d`` must be odd and coprime to ab; d = 1 gives None.
    """
    values = {v2(mult_order_ratio(a, b, p)) for p in factorize(d).primes}
    if len(values) != 1:
        return None
    return values.pop()


def classify_class(a: int, b: int, l: int) -> GoodClass:
    """Membership class of l decided from multiplicative orders only."""
    GoodnessQuery(a, b, l)
    if l == 1:
        return GoodClass.BOTH
    if gcd(a * b, l) != 1:
        return GoodClass.BAD
    # from here on ab is odd whenever l is even.  For beta >= 3 the test is
    # a/b = -1 (mod 2^beta); ord_{2^beta}(a/b) = 2 is weaker (ord_8(3) = 2).
    split = two_adic_split(l)
    beta, d = split.beta, split.odd_part
    if d == 1:
        if beta == 1:
            return GoodClass.BOTH
        if (a + b) % (1 << beta) == 0:
            return GoodClass.ODDLY_GOOD
        return GoodClass.BAD
    if beta >= 2:
        if (a + b) % (1 << beta) != 0:
            return GoodClass.BAD
        # every prime of d needs 2 || ord_p(a/b); 2 || ord_d(a/b) alone is
        # weaker (l = 4 * 7 * 11 with (a, b) = (3, 1))
        if odd_part_valuation(a, b, d) == 1:
            return GoodClass.ODDLY_GOOD
        return GoodClass.BAD
    s = odd_part_valuation(a, b, d)
    if s is None or s == 0:
        return GoodClass.BAD
    return GoodClass.ODDLY_GOOD if s == 1 else GoodClass.EVENLY_GOOD


def classify(a: int, b: int, l: int) -> GoodnessVerdict:
    """Classify l for (a, b), with witnesses filled in for good l."""
    cls = classify_class(a, b, l)
    order = mult_order_ratio(a, b, l) if gcd(a * b, l) == 1 else None
    if cls is GoodClass.BAD:
        return GoodnessVerdict(cls, None, None, order)
    odd, even = _scan(a, b, l, cls.is_oddly_good, cls.is_evenly_good)
    return GoodnessVerdict(
        cls,
        odd if cls.is_oddly_good else None,
        even if cls.is_evenly_good else None,
        order,
    )


def is_good(a: int, b: int, l: int) -> bool:
    return classify_class(a, b, l).is_good


def is_oddly_good(a: int, b: int, l: int) -> bool:
    return classify_class(a, b, l).is_oddly_good


def is_evenly_good(a: int, b: int, l: int) -> bool:
    return classify_class(a, b, l).is_evenly_good


def necessary_profile(a: int, b: int, l: int) -> NecessaryProfile:
    """Order constraints satisfied by a good l; raises on bad l.

    The returned profile is checked against the classification: a common
    s = 1 (or d = 1, l > 2) means 2 || ord_l(a/b) with beta <= gamma, and
    s >= 2 means 2^s || ord_l(a/b) with beta <= 1.
    """
    cls = classify_class(a, b, l)
    if cls is GoodClass.BAD:
        raise ValueError(f"{l} is bad for (a, b) = ({a}, {b})")
    split = two_adic_split(l)
    beta, d = split.beta, split.odd_part
    gamma = None if a + b == 0 else v2(a + b)
    v2_order = v2(mult_order_ratio(a, b, l))
    s = odd_part_valuation(a, b, d) if d > 1 else None

    if l <= 2:
        return NecessaryProfile(s, beta, gamma, (beta, beta), v2_order)
    if s is None or s == 1:
        lo = 2 if d == 1 else 0
        rng = (lo, gamma)
        if v2_order != 1 or not (lo <= beta and (gamma is None or beta <= gamma)):
            raise AssertionError(f"profile inconsistent with classification for l={l}")
    else:
        rng = (0, 1)
        if v2_order != s or beta > 1:
            raise AssertionError(f"profile inconsistent with classification for l={l}")
    return NecessaryProfile(s, beta, gamma, rng, v2_order)
