"""Exact elementary number theory shared by the rest of the package.

Everything here is a pure function of integers.  Orders are computed by
descending from the Carmichael exponent over its prime factors; the naive
power iteration lives in the test-suite as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from sympy import factorint

MAX_FACTOR_INPUT = 2**63


@dataclass(frozen=True)
class Factorization:
    prime_powers: tuple[tuple[int, int], ...]
    value: int

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    def __iter__(self):
        return iter(self.prime_powers)

    def __len__(self) -> int:
        return len(self.prime_powers)


@dataclass(frozen=True)
class TwoAdicSplit:
    beta: int
    odd_part: int


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2 is undefined at 0")
    n = abs(n)
    return (n & -n).bit_length() - 1


def exact_divides(s: int, n: int) -> bool:
    """True iff 2**s exactly divides ``n``."""
    return v2(n) == s


def two_adic_split(n: int) -> TwoAdicSplit:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    beta = v2(n)
    return TwoAdicSplit(beta, n >> beta)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of ``1 <= n <= 2**63``.

    Primes come out strictly increasing.  Small factors are stripped by trial
    division inside sympy, the remainder by Pollard rho / p-1.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    if n > MAX_FACTOR_INPUT:
        raise ValueError(f"{n} exceeds the supported range (2**63)")
    pairs = tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))
    return Factorization(pairs, n)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n``."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius undefined for {n}")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def _carmichael_prime_power(p: int, e: int) -> int:
    if p == 2:
        if e <= 2:
            return 1 << (e - 1)
        return 1 << (e - 2)
    return p ** (e - 1) * (p - 1)


@lru_cache(maxsize=65536)
def carmichael(n: int) -> int:
    """Exponent of the unit group (Z/nZ)^x."""
    if n < 1:
        raise ValueError(f"carmichael undefined for {n}")
    out = 1
    for p, e in factorize(n):
        out = lcm(out, _carmichael_prime_power(p, e))
    return out


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``n``.

    ``a`` is reduced into [0, n) first, so negative inputs are fine.
    The trivial groups n = 1 and n = 2 give 1.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    a %= n
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    if n <= 2:
        return 1
    order = carmichael(n)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def mult_order_ratio(a: int, b: int, n: int) -> int:
    """Order of a * b^{-1} in (Z/nZ)^x."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if gcd(a, n) != 1 or gcd(b, n) != 1:
        raise ValueError(f"{a} and {b} must both be units modulo {n}")
    if n == 1:
        return 1
    return mult_order(a * pow(b, -1, n), n)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    step = m1 // g
    t = ((r2 - r1) // g) * pow(step, -1, m2 // g) % (m2 // g) if m2 // g > 1 else 0
    modulus = step * m2
    return (r1 + m1 * t) % modulus, modulus


def solve_half_order_system(values: list[int]) -> int | None:
    """Least x >= 0 with x = a_i (mod 2 a_i) for every a_i, or None.

    A solution exists exactly when all a_i share the same 2-adic valuation.
    """
    if not values:
        raise ValueError("need at least one congruence")
    if any(a < 1 for a in values):
        raise ValueError("all values must be positive")
    r, m = 0, 1
    for a in values:
        merged = _crt_pair(r, m, a % (2 * a), 2 * a)
        if merged is None:
            return None
        r, m = merged
    return r
