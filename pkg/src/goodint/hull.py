"""Hull dimensions of abelian codes in F_q[A x Z_{p^k}], q = p^nu, p not dividing |A|.

A code is modelled by its dimension profile: one integer 0 <= eps <= p^k per
cyclotomic class of A (q-classes for the Euclidean form, q^2-classes for the
Hermitian one).  Classes paired with themselves contribute
s * min(eps, p^k - eps) to the hull; a pair (S, S') contributes
s * (min(eps, p^k - eps') + min(eps', p^k - eps)).

Averages are over the uniform distribution on profiles and are exact
``Fraction`` values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .abelian import AbelianGroup, ClassLayout, classify_euclidean, classify_hermitian
from .arith import factorize
from .counting import q_size_closed, r_size_closed


class InnerProduct(str, enum.Enum):
    EUCLIDEAN = "E"
    HERMITIAN = "H"


class Kind(str, enum.Enum):
    SELF_PAIRED = "self"
    PAIR_FIRST = "first"
    PAIR_SECOND = "second"


@dataclass(frozen=True)
class LayoutEntry:
    size: int
    kind: Kind
    partner: int | None = None


@dataclass(frozen=True)
class CodeProfile:
    layout: tuple[LayoutEntry, ...]
    epsilons: tuple[int, ...]
    pk: int

    def __post_init__(self):
        if self.pk < 1:
            raise ValueError("p^k must be positive")
        if len(self.epsilons) != len(self.layout):
            raise ValueError(f"{len(self.epsilons)} dimensions for {len(self.layout)} classes")
        for i, (entry, eps) in enumerate(zip(self.layout, self.epsilons)):
            if not 0 <= eps <= self.pk:
                raise ValueError(f"eps[{i}]={eps} outside [0, {self.pk}]")
            if entry.kind is Kind.SELF_PAIRED:
                if entry.partner is not None:
                    raise ValueError(f"self-paired class {i} has a partner")
                continue
            j = entry.partner
            if j is None or not 0 <= j < len(self.layout) or j == i:
                raise ValueError(f"class {i} has no valid partner")
            other = self.layout[j]
            want = Kind.PAIR_SECOND if entry.kind is Kind.PAIR_FIRST else Kind.PAIR_FIRST
            if other.kind is not want or other.partner != i or other.size != entry.size:
                raise ValueError(f"classes {i} and {j} are not a matching pair")

    def dual(self) -> "CodeProfile":
        """Profile of the dual code: eps_i -> p^k - eps_{partner(i)}."""
        eps = []
        for i, entry in enumerate(self.layout):
            j = i if entry.kind is Kind.SELF_PAIRED else entry.partner
            eps.append(self.pk - self.epsilons[j])
        return CodeProfile(self.layout, tuple(eps), self.pk)


def layout_entries(layout: ClassLayout) -> tuple[LayoutEntry, ...]:
    """Self-paired classes first, then first members of pairs, then partners."""
    r1, r2 = layout.r_self, layout.r_pair
    entries = [LayoutEntry(c.size, Kind.SELF_PAIRED) for c in layout.self_paired]
    entries += [LayoutEntry(a.size, Kind.PAIR_FIRST, r1 + r2 + l) for l, (a, _) in enumerate(layout.pairs)]
    entries += [LayoutEntry(b.size, Kind.PAIR_SECOND, r1 + l) for l, (_, b) in enumerate(layout.pairs)]
    return tuple(entries)


def hull_dim(profile: CodeProfile) -> int:
    n = profile.pk
    eps = profile.epsilons
    total = 0
    for i, entry in enumerate(profile.layout):
        if entry.kind is Kind.SELF_PAIRED:
            total += entry.size * min(eps[i], n - eps[i])
        else:
            # each member of a pair adds its own half
            total += entry.size * min(eps[i], n - eps[entry.partner])
    return total


@dataclass(frozen=True)
class HullSummary:
    average: Fraction
    upper_bound: Fraction
    lower_bound: Fraction
    is_zero: bool
    m: int
    pk: int
    fixed_set_size: int
    delta_p: int
    inner_product: InnerProduct


def _check_prime(p: int) -> None:
    if p < 2 or factorize(p).prime_powers != ((p, 1),):
        raise ValueError(f"p={p} is not prime")


def _validate(group: AbelianGroup, p: int, nu: int, k: int) -> None:
    _check_prime(p)
    if nu < 1:
        raise ValueError(f"nu must be positive, got {nu}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if group.order % p == 0:
        raise ValueError(f"p={p} divides |A|={group.order}")


def average_formula(m: int, pk: int, fixed: int) -> Fraction:
    """Mean hull dimension given |A| = m, p^k and the fixed-set size.

    The parity correction is 1 exactly when p^k is even, which for k = 0
    (p^k = 1) reduces the formula to (m - fixed) / 4 for every p.
    """
    delta = 1 if pk % 2 == 0 else 0
    n1 = pk + 1
    return m * pk * (Fraction(1, 3) - Fraction(1, 6 * n1)) - fixed * (Fraction(n1, 12) + Fraction(2 - 3 * delta, 12 * n1))


def avg_hull(group: AbelianGroup, p: int, nu: int, k: int, ip: InnerProduct | str = InnerProduct.EUCLIDEAN) -> HullSummary:
    """Average Euclidean or Hermitian hull dimension, in F_q-dimensions.

    For the Hermitian form the alphabet is F_{q^2} with q = p^nu.
    """
    ip = InnerProduct(ip)
    _validate(group, p, nu, k)
    q = p**nu
    m, pk = group.order, p**k
    fixed = q_size_closed(group, q) if ip is InnerProduct.EUCLIDEAN else r_size_closed(group, q)
    average = average_formula(m, pk, fixed)
    is_zero = average == 0
    divisor = 12 if ip is InnerProduct.EUCLIDEAN else 8
    return HullSummary(
        average=average,
        upper_bound=Fraction(m * pk, 3),
        lower_bound=Fraction(0) if is_zero else Fraction(m * pk, divisor),
        is_zero=is_zero,
        m=m,
        pk=pk,
        fixed_set_size=fixed,
        delta_p=1 if pk % 2 == 0 else 0,
        inner_product=ip,
    )


def class_layout(group: AbelianGroup, q: int, ip: InnerProduct | str) -> ClassLayout:
    if InnerProduct(ip) is InnerProduct.EUCLIDEAN:
        return classify_euclidean(group, q)
    return classify_hermitian(group, q)


def avg_hull_bruteforce(group: AbelianGroup, p: int, nu: int, k: int, ip: InnerProduct | str = InnerProduct.EUCLIDEAN) -> Fraction:
    """Mean hull dimension by averaging the per-class terms over all dimensions.

    Linearity of expectation lets each class (or pair) be averaged on its own.
    """
    _validate(group, p, nu, k)
    n = p**k
    if (n + 1) ** 2 > 10**6:
        raise ValueError(f"p^k={n} too large to enumerate")
    layout = class_layout(group, p**nu, ip)
    if layout.t > 10**4:
        raise ValueError(f"{layout.t} classes exceed the enumeration cap")
    values = range(n + 1)
    self_mean = Fraction(sum(min(e, n - e) for e in values), n + 1)
    pair_mean = Fraction(
        sum(min(e, n - f) + min(f, n - e) for e in values for f in values),
        (n + 1) ** 2,
    )
    return sum((c.size * self_mean for c in layout.self_paired), Fraction(0)) + sum(
        (a.size * pair_mean for a, _ in layout.pairs), Fraction(0)
    )


@dataclass(frozen=True)
class ScanRow:
    group: AbelianGroup
    p: int
    nu: int
    k: int
    inner_product: InnerProduct
    summary: HullSummary | None = None
    error: str | None = None


def scan_table(
    groups: Iterable[AbelianGroup],
    params: Iterable[tuple[int, int, int]],
    inner: Iterable[InnerProduct | str] = (InnerProduct.EUCLIDEAN,),
) -> list[ScanRow]:
    """One row per (group, (p, nu, k), inner product), in input order.

    Invalid cells carry their error message instead of a summary.
    """
    params = list(params)
    inner = [InnerProduct(ip) for ip in inner]
    rows = []
    for group in groups:
        for p, nu, k in params:
            for ip in inner:
                try:
                    rows.append(ScanRow(group, p, nu, k, ip, avg_hull(group, p, nu, k, ip)))
                except ValueError as exc:
                    rows.append(ScanRow(group, p, nu, k, ip, error=str(exc)))
    return rows
