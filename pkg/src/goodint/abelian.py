"""Finite abelian groups, element orders and q-cyclotomic classes.

A group is stored by its primary decomposition Z_{n_1} x ... x Z_{n_r} with
every n_i a prime power, so ``AbelianGroup([6])`` and ``AbelianGroup([2, 3])``
are the same value.  Elements are coordinate tuples.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import gcd, lcm, prod
from typing import Iterator

from sympy.utilities.iterables import partitions

from .arith import divisors, factorize, mobius

DEFAULT_MAX_ENUM = 10**6

Element = tuple[int, ...]


def max_enum() -> int:
    """Enumeration cap, overridable through ``GOODINT_MAX_ENUM``."""
    raw = os.environ.get("GOODINT_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


def _primary_parts(orders) -> tuple[int, ...]:
    parts = []
    for n in orders:
        n = int(n)
        if n < 1:
            raise ValueError(f"cyclic orders must be positive, got {n}")
        parts.extend(p**e for p, e in factorize(n))
    return tuple(sorted(parts)) or (1,)


@dataclass(frozen=True)
class AbelianGroup:
    cyclic_orders: tuple[int, ...]

    def __init__(self, cyclic_orders=()):
        object.__setattr__(self, "cyclic_orders", _primary_parts(cyclic_orders))

    @classmethod
    def parse(cls, literal: str) -> "AbelianGroup":
        """Parse ``"2,4,3"`` into Z_2 x Z_4 x Z_3."""
        text = literal.strip()
        if not text:
            return cls(())
        try:
            orders = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"bad group literal {literal!r}") from None
        return cls(orders)

    def __str__(self) -> str:
        return " x ".join(f"Z_{n}" for n in self.cyclic_orders)

    @property
    def literal(self) -> str:
        return ",".join(map(str, self.cyclic_orders))

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.cyclic_orders)

    @property
    def is_trivial(self) -> bool:
        return self.cyclic_orders == (1,)

    def sylow(self, p: int) -> "AbelianGroup":
        return AbelianGroup([n for n in self.cyclic_orders if n % p == 0])

    def sylow_exponents(self, p: int) -> tuple[int, ...]:
        """Exponents a_i of the Sylow p-subgroup prod Z_{p^{a_i}}, sorted."""
        return tuple(sorted(factorize(n).prime_powers[0][1] for n in self.cyclic_orders if n % p == 0))

    def scale(self, c: int, x: Element) -> Element:
        return tuple(c * xi % n for xi, n in zip(x, self.cyclic_orders))

    def neg(self, x: Element) -> Element:
        return self.scale(-1, x)

    def element_order(self, x: Element) -> int:
        return lcm(*(n // gcd(xi, n) for xi, n in zip(x, self.cyclic_orders)))

    @property
    def zero(self) -> Element:
        return (0,) * len(self.cyclic_orders)


def group_order(group: AbelianGroup) -> int:
    return group.order


def group_exponent(group: AbelianGroup) -> int:
    return group.exponent


def killed_by(group: AbelianGroup, e: int) -> int:
    """Number of x with e * x = 0."""
    return prod(gcd(e, n) for n in group.cyclic_orders)


def count_order_d(group: AbelianGroup, d: int) -> int:
    """Number of elements of order exactly ``d``, by Mobius inversion."""
    if d < 1:
        raise ValueError(f"order must be positive, got {d}")
    if group.exponent % d:
        return 0
    return sum(mobius(d // e) * killed_by(group, e) for e in divisors(d))


def order_table(group: AbelianGroup) -> dict[int, int]:
    """Map d -> N_A(d) over the divisors of the exponent."""
    return {d: count_order_d(group, d) for d in divisors(group.exponent)}


def enumerate_elements(group: AbelianGroup, cap: int | None = None) -> Iterator[Element]:
    """All elements in lexicographic order."""
    cap = max_enum() if cap is None else cap
    if group.order > cap:
        raise ValueError(f"group of order {group.order} exceeds the enumeration cap {cap}")
    return itertools.product(*(range(n) for n in group.cyclic_orders))


def groups_of_order(m: int) -> Iterator[AbelianGroup]:
    """Every abelian group of order ``m`` up to isomorphism."""
    per_prime = []
    for p, e in factorize(m):
        options = []
        for part in partitions(e):
            options.append([p**k for k, mult in part.items() for _ in range(mult)])
        per_prime.append(options)
    for combo in itertools.product(*per_prime):
        yield AbelianGroup([n for block in combo for n in block])


def groups_up_to(n: int, coprime_to: int = 1) -> Iterator[AbelianGroup]:
    for m in range(1, n + 1):
        if gcd(m, coprime_to) == 1:
            yield from groups_of_order(m)


class EuclidType(str, enum.Enum):
    I = "I"  # noqa: E741
    II = "II"


class HermitType(str, enum.Enum):
    I_PRIME = "I'"
    II_PRIME = "II'"


@dataclass(frozen=True)
class CycClass:
    representative: Element
    size: int
    members: tuple[Element, ...] = field(repr=False, default=())
    euclid_type: EuclidType | None = None
    hermit_type: HermitType | None = None


@dataclass(frozen=True)
class ClassLayout:
    """Classes split into self-paired ones and (class, partner) pairs.

    For the Euclidean pairing the partner of S(a) is S(-a); for the Hermitian
    pairing over q^2-classes it is S(-q a).
    """

    self_paired: tuple[CycClass, ...]
    pairs: tuple[tuple[CycClass, CycClass], ...]

    @property
    def r_self(self) -> int:
        return len(self.self_paired)

    @property
    def r_pair(self) -> int:
        return len(self.pairs)

    @property
    def t(self) -> int:
        return self.r_self + 2 * self.r_pair

    @cached_property
    def fixed_set_size(self) -> int:
        return sum(c.size for c in self.self_paired)


def _check_coprime(group: AbelianGroup, q: int) -> None:
    if q < 1 or gcd(q, group.order) != 1:
        raise ValueError(f"q={q} is not coprime to |A|={group.order}")


def cyclotomic_classes(group: AbelianGroup, q: int) -> list[CycClass]:
    """Orbits of multiplication by q; representatives are lexicographically least."""
    _check_coprime(group, q)
    seen: set[Element] = set()
    classes = []
    for x in enumerate_elements(group):
        if x in seen:
            continue
        members = [x]
        y = group.scale(q, x)
        while y != x:
            members.append(y)
            y = group.scale(q, y)
        seen.update(members)
        classes.append(CycClass(x, len(members), tuple(members)))
    return classes


def _pair_up(group, classes, partner_of, self_tag, pair_tag, attr) -> ClassLayout:
    where = {x: i for i, c in enumerate(classes) for x in c.members}
    self_paired, pairs, done = [], [], set()
    for i, c in enumerate(classes):
        if i in done:
            continue
        j = where[partner_of(c.representative)]
        if j == i:
            self_paired.append(replace(c, **{attr: self_tag}))
        else:
            done.add(j)
            pairs.append((replace(c, **{attr: pair_tag}), replace(classes[j], **{attr: pair_tag})))
        done.add(i)
    return ClassLayout(tuple(self_paired), tuple(pairs))


def classify_euclidean(group: AbelianGroup, q: int) -> ClassLayout:
    """q-classes tagged type I (S(a) = S(-a)) or paired as type II."""
    return _pair_up(group, cyclotomic_classes(group, q), group.neg, EuclidType.I, EuclidType.II, "euclid_type")


def classify_hermitian(group: AbelianGroup, q: int) -> ClassLayout:
    """q^2-classes tagged type I' (-q a in S(a)) or paired as type II'."""
    return _pair_up(
        group,
        cyclotomic_classes(group, q * q),
        lambda x: group.scale(-q, x),
        HermitType.I_PRIME,
        HermitType.II_PRIME,
        "hermit_type",
    )


def q_set_direct(group: AbelianGroup, q: int) -> int:
    """|Q_q(A)|: total size of the type I classes."""
    return classify_euclidean(group, q).fixed_set_size


def r_set_direct(group: AbelianGroup, q: int) -> int:
    """|R_{q^2}(A)|: total size of the type I' classes."""
    return classify_hermitian(group, q).fixed_set_size
