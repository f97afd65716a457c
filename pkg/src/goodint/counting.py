"""Closed forms for the fixed sets Q_q(A) and R_{q^2}(A).

With q = p^nu coprime to m = |A|, write m = 2^beta * m_0 * m_1 * m_2 * ...
where m_alpha collects the odd prime powers r^e || m with 2^alpha || ord_r(q),
and let gamma = v2(q + 1).  Then

    |Q| = m_1 * sum_{i<=gamma} N_A(2^i) + (1 + N_A(2))^{min(1,beta)} * sum_{alpha>=2} (m_alpha - 1)
    |R| = m_1 * sum_{i<=gamma} N_A(2^i)

These are checked against the divisor sums over good / oddly-good orders and
against direct class enumeration in the test-suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .abelian import AbelianGroup, count_order_d
from .arith import divisors, factorize, mult_order, v2
from .goodness import brute_force_classify, classify_class


@dataclass(frozen=True)
class SemigroupDecomposition:
    beta: int
    parts: dict[int, int] = field(default_factory=dict)
    gamma: int = 0

    def m_alpha(self, alpha: int) -> int:
        return self.parts.get(alpha, 1)

    def tail_excess(self) -> int:
        """sum over alpha >= 2 of (m_alpha - 1)."""
        return sum(v - 1 for a, v in self.parts.items() if a >= 2)


@dataclass(frozen=True)
class PartitionShape:
    """Exponent multiset of an abelian q-group prod Z_{q^{a_i}}."""

    exponents: tuple[int, ...]

    def __init__(self, exponents=()):
        exps = tuple(sorted(int(e) for e in exponents))
        if any(e < 1 for e in exps):
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "exponents", exps)

    @property
    def weight(self) -> int:
        return sum(self.exponents)


def _check(m: int, q: int) -> None:
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if gcd(m, q) != 1:
        raise ValueError(f"q={q} is not coprime to m={m}")


def decompose(m: int, q: int) -> SemigroupDecomposition:
    """Split m by the 2-adic valuation of ord_r(q) over its odd primes r."""
    _check(m, q)
    beta = v2(m)
    parts: dict[int, int] = {}
    for r, e in factorize(m >> beta):
        alpha = v2(mult_order(q, r))
        parts[alpha] = parts.get(alpha, 1) * r**e
    return SemigroupDecomposition(beta, dict(sorted(parts.items())), v2(q + 1))


def _good_orders_sum(group: AbelianGroup, q: int, accept) -> int:
    _check(group.order, q)
    return sum(count_order_d(group, d) for d in divisors(group.exponent) if accept(d))


def q_size_sum(group: AbelianGroup, q: int, oracle: bool = False) -> int:
    """sum over d | M of [d good for (q, 1)] * N_A(d).

    ``oracle=True`` decides goodness by exponent scanning instead.
    """
    if oracle:
        return _good_orders_sum(group, q, lambda d: brute_force_classify(q, 1, d).cls.is_good)
    return _good_orders_sum(group, q, lambda d: classify_class(q, 1, d).is_good)


def r_size_sum(group: AbelianGroup, q: int, oracle: bool = False) -> int:
    """sum over d | M of [d oddly-good for (q, 1)] * N_A(d)."""
    if oracle:
        return _good_orders_sum(group, q, lambda d: brute_force_classify(q, 1, d).cls.is_oddly_good)
    return _good_orders_sum(group, q, lambda d: classify_class(q, 1, d).is_oddly_good)


def _two_power_prefix(group: AbelianGroup, gamma: int) -> int:
    # N_A(2^i) vanishes past the Sylow-2 exponent, so the sum stops early
    return sum(count_order_d(group, 1 << i) for i in range(gamma + 1) if group.exponent % (1 << i) == 0)


def q_size_closed(group: AbelianGroup, q: int) -> int:
    dec = decompose(group.order, q)
    head = dec.m_alpha(1) * _two_power_prefix(group, dec.gamma)
    mult = (1 + count_order_d(group, 2)) if dec.beta else 1
    return head + mult * dec.tail_excess()


def r_size_closed(group: AbelianGroup, q: int) -> int:
    dec = decompose(group.order, q)
    return dec.m_alpha(1) * _two_power_prefix(group, dec.gamma)


def bounds_q(group: AbelianGroup, q: int) -> tuple[int, int]:
    """Lower/upper bounds on |Q| depending only on m and q.

    The extremes are the cyclic and the elementary abelian Sylow-2 subgroup.
    The elementary abelian one has 1 + N_A(2) = 2^beta, so the second term
    of the upper bound carries 2^beta.
    """
    dec = decompose(group.order, q)
    beta, gamma, m1, tail = dec.beta, dec.gamma, dec.m_alpha(1), dec.tail_excess()
    lower = 2 ** min(beta, gamma) * m1 + 2 ** min(1, beta) * tail
    upper = 2 ** min(beta, gamma * beta) * m1 + 2**beta * tail
    return lower, upper


def bounds_r(group: AbelianGroup, q: int) -> tuple[int, int]:
    dec = decompose(group.order, q)
    beta, gamma, m1 = dec.beta, dec.gamma, dec.m_alpha(1)
    return 2 ** min(beta, gamma) * m1, 2 ** min(beta, gamma * beta) * m1


def is_finer(fine: PartitionShape, coarse: PartitionShape) -> bool:
    """True iff ``coarse`` arises from ``fine`` by grouping parts and summing."""
    if fine.weight != coarse.weight:
        raise ValueError(f"weights differ: {fine.weight} != {coarse.weight}")
    if len(fine.exponents) < len(coarse.exponents):
        return False
    parts = sorted(fine.exponents, reverse=True)
    room = list(coarse.exponents)

    def place(i: int) -> bool:
        if i == len(parts):
            return all(r == 0 for r in room)
        tried = set()
        for j, r in enumerate(room):
            if r >= parts[i] and r not in tried:
                tried.add(r)
                room[j] -= parts[i]
                if place(i + 1):
                    return True
                room[j] += parts[i]
        return False

    # every coarse part must receive something; exact fill guarantees that
    return place(0)
