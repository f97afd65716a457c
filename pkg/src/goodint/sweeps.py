"""Exhaustive consistency sweeps.

Each sweep returns a :class:`CheckResult` with the number of cases examined
and a list of human-readable counterexamples.  The CLI ``verify`` command and
the acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy.utilities.iterables import partitions

from . import abelian, counting, goodness, hull
from .abelian import AbelianGroup
from .arith import divisors, mult_order_ratio, two_adic_split
from .counting import PartitionShape
from .goodness import GoodClass

GOODNESS_PAIRS = ((2, 1), (3, 1), (4, 1), (8, 1), (3, 2), (5, 2), (5, 3), (7, 1), (9, 2), (-2, 3))
COUNTING_QS = (2, 3, 4, 5, 7, 8, 9)
HULL_FIELDS = ((2, 1), (2, 2), (3, 1), (5, 1))
ODD_COFACTORS = (1, 3, 5, 15)
MONOTONE_QS = (3, 5, 7, 9, 11, 13, 23, 25, 27, 31, 127)

MAX_SHOWN = 20


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag}  {self.name}: {self.checked} cases, {len(self.failures)} failures, {self.seconds:.1f}s"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failure_count": len(self.failures),
            "failures": self.failures[:MAX_SHOWN],
        }


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run



@_timed
def goodness_equivalence(max_l: int = 5000, pairs=GOODNESS_PAIRS) -> CheckResult:
    """Order-based classification equals exponent scanning."""
    res = CheckResult("goodness classify == brute force")
    for a, b in pairs:
        for l in range(1, max_l + 1):
            res.checked += 1
            fast, slow = goodness.classify(a, b, l), goodness.brute_force_classify(a, b, l)
            if fast != slow:
                res.fail(f"(a,b,l)=({a},{b},{l}): {fast.cls.value} vs {slow.cls.value}")
    return res


@_timed
def disjointness_closure_doubling(max_l: int = 5000, max_odd: int = 2000, pairs=GOODNESS_PAIRS) -> CheckResult:
    """Parity disjointness, divisor closure of odd integers, and the doubling law."""
    res = CheckResult("disjointness / divisor closure / doubling")
    for a, b in pairs:
        for l in range(3, max_l + 1):
            if goodness.classify_class(a, b, l) is GoodClass.BAD:
                continue
            res.checked += 1
            odd = goodness.witness_search(a, b, l, "odd")
            even = goodness.witness_search(a, b, l, "even")
            if (odd is None) == (even is None):
                res.fail(f"({a},{b}) l={l}: parities odd={odd} even={even}")
        for d in range(3, max_odd + 1, 2):
            cls = goodness.classify_class(a, b, d)
            if cls is GoodClass.BAD:
                continue
            for j in divisors(d):
                res.checked += 1
                sub = goodness.classify_class(a, b, j)
                if cls is GoodClass.ODDLY_GOOD and not sub.is_oddly_good:
                    res.fail(f"({a},{b}) {d} oddly-good but divisor {j} is {sub.value}")
                if cls is GoodClass.EVENLY_GOOD and not sub.is_evenly_good:
                    res.fail(f"({a},{b}) {d} evenly-good but divisor {j} is {sub.value}")
        if (a * b) % 2 == 0:
            continue
        for d in range(3, max_l // 2 + 1, 2):
            if gcd(a * b, d) != 1:
                continue
            res.checked += 1
            good_d, good_2d = goodness.is_good(a, b, d), goodness.is_good(a, b, 2 * d)
            if good_d != good_2d:
                res.fail(f"({a},{b}) d={d}: good(d)={good_d} good(2d)={good_2d}")
            elif good_d:
                od, o2d = mult_order_ratio(a, b, d), mult_order_ratio(a, b, 2 * d)
                if od != o2d or od % 2:
                    res.fail(f"({a},{b}) d={d}: ord_d={od} ord_2d={o2d}")
    return res


@_timed
def fixed_set_agreement(max_order: int = 200, qs=COUNTING_QS) -> CheckResult:
    """|Q| and |R| by enumeration, divisor sum and closed form."""
    res = CheckResult("Q/R three-way agreement")
    for q in qs:
        for group in abelian.groups_up_to(max_order, q):
            res.checked += 1
            qs3 = (abelian.q_set_direct(group, q), counting.q_size_sum(group, q), counting.q_size_closed(group, q))
            rs3 = (abelian.r_set_direct(group, q), counting.r_size_sum(group, q), counting.r_size_closed(group, q))
            if len(set(qs3)) != 1 or len(set(rs3)) != 1:
                res.fail(f"q={q} A={group}: Q direct/sum/closed={qs3} R={rs3}")
    return res


def _hull_cells(max_order: int, fields=HULL_FIELDS, ks=(0, 1)):
    for p, nu in fields:
        for group in abelian.groups_up_to(max_order, p):
            for k in ks:
                for ip in hull.InnerProduct:
                    yield group, p, nu, k, ip


@_timed
def hull_exactness(max_order: int = 60) -> CheckResult:
    """Closed-form average hull dimension equals the enumeration mean."""
    res = CheckResult("average hull == enumeration")
    anchors = [
        (AbelianGroup([3]), 2, 1, 1, hull.InnerProduct.EUCLIDEAN, Fraction(1)),
        (AbelianGroup([5]), 2, 1, 0, hull.InnerProduct.HERMITIAN, Fraction(1)),
    ]
    for group, p, nu, k, ip, want in anchors:
        res.checked += 1
        got = hull.avg_hull(group, p, nu, k, ip).average
        oracle = hull.avg_hull_bruteforce(group, p, nu, k, ip)
        if not got == oracle == want:
            res.fail(f"anchor A={group} p={p} nu={nu} k={k} {ip.value}: {got} / {oracle}, want {want}")
    for group, p, nu, k, ip in _hull_cells(max_order):
        res.checked += 1
        got = hull.avg_hull(group, p, nu, k, ip).average
        oracle = hull.avg_hull_bruteforce(group, p, nu, k, ip)
        if got != oracle:
            res.fail(f"A={group} p={p} nu={nu} k={k} {ip.value}: formula {got} != enumeration {oracle}")
    return res


@_timed
def hull_bounds(max_order: int = 60, zero_uses: str = "order") -> CheckResult:
    """Strict upper bound, zero characterization and nonzero lower bounds.

    ``zero_uses`` picks which integer the zero test puts in G (Euclidean) or
    OG (Hermitian): the group order m, or the group exponent M.
    """
    if zero_uses not in ("order", "exponent"):
        raise ValueError(f"zero_uses must be 'order' or 'exponent', got {zero_uses!r}")
    res = CheckResult(f"average hull bounds (zero test on {zero_uses})")
    for group, p, nu, k, ip in _hull_cells(max_order):
        res.checked += 1
        s = hull.avg_hull(group, p, nu, k, ip)
        avg, mpk = s.average, group.order * p**k
        tag = f"A={group} p={p} nu={nu} k={k} {ip.value}"
        if not avg < Fraction(mpk, 3):
            res.fail(f"{tag}: {avg} >= m p^k / 3")
        target = group.order if zero_uses == "order" else group.exponent
        member = goodness.is_good if ip is hull.InnerProduct.EUCLIDEAN else goodness.is_oddly_good
        predicted_zero = k == 0 and member(p**nu, 1, target)
        if (avg == 0) != predicted_zero:
            res.fail(f"{tag}: average {avg}, zero predicted {predicted_zero}")
        divisor = 12 if ip is hull.InnerProduct.EUCLIDEAN else 8
        if avg != 0 and avg < Fraction(mpk, divisor):
            res.fail(f"{tag}: {avg} < m p^k / {divisor}")
    return res


def two_group_shapes(max_beta: int):
    for beta in range(max_beta + 1):
        for part in partitions(beta):
            if beta == 0:
                yield PartitionShape(())
                continue
            yield PartitionShape([k for k, mult in part.items() for _ in range(mult)])


def _with_cofactor(shape: PartitionShape, cofactor: int) -> AbelianGroup:
    return AbelianGroup([2**e for e in shape.exponents] + [cofactor])


@_timed
def monotonicity(max_beta: int = 6, cofactors=ODD_COFACTORS, qs=MONOTONE_QS) -> CheckResult:
    """Finer Sylow-2 subgroup gives at least as large |Q| and |R|."""
    res = CheckResult("finer Sylow-2 => larger |Q|, |R|")
    shapes = list(two_group_shapes(max_beta))

    @lru_cache(maxsize=None)
    def sizes(shape, cofactor, q):
        g = _with_cofactor(shape, cofactor)
        return abelian.q_set_direct(g, q), abelian.r_set_direct(g, q)

    for fine, coarse in itertools.product(shapes, repeat=2):
        if fine.weight != coarse.weight or not counting.is_finer(fine, coarse):
            continue
        for cofactor in cofactors:
            for q in qs:
                if gcd(q, 2 * cofactor) != 1:
                    continue
                res.checked += 1
                (qa, ra), (qb, rb) = sizes(fine, cofactor, q), sizes(coarse, cofactor, q)
                if qa < qb or ra < rb:
                    res.fail(f"q={q} {fine.exponents}<={coarse.exponents} x {cofactor}: Q {qa}<{qb} or R {ra}<{rb}")
                if fine == coarse and (qa, ra) != (qb, rb):
                    res.fail(f"q={q} isomorphic Sylow-2 {fine.exponents} x {cofactor} disagree")
    return res


@_timed
def finer_partial_order(max_weight: int = 8) -> CheckResult:
    """Reflexive, antisymmetric and transitive on each fixed weight."""
    res = CheckResult("is_finer is a partial order")
    for w in range(1, max_weight + 1):
        shapes = [s for s in two_group_shapes(w) if s.weight == w]
        rel = {(x, y): counting.is_finer(x, y) for x in shapes for y in shapes}
        for x in shapes:
            res.checked += 1
            if not rel[x, x]:
                res.fail(f"not reflexive at {x.exponents}")
        for x, y in itertools.product(shapes, repeat=2):
            res.checked += 1
            if x != y and rel[x, y] and rel[y, x]:
                res.fail(f"not antisymmetric: {x.exponents}, {y.exponents}")
        for x, y, z in itertools.product(shapes, repeat=3):
            if rel[x, y] and rel[y, z]:
                res.checked += 1
                if not rel[x, z]:
                    res.fail(f"not transitive: {x.exponents} {y.exponents} {z.exponents}")
    return res


@_timed
def order_counts(max_order: int = 200) -> CheckResult:
    """Mobius-inversion N_A(d) equals counting orders element by element."""
    res = CheckResult("N_A(d) == enumeration")
    for group in abelian.groups_up_to(max_order):
        res.checked += 1
        seen: dict[int, int] = {}
        for x in abelian.enumerate_elements(group):
            d = group.element_order(x)
            seen[d] = seen.get(d, 0) + 1
        table = abelian.order_table(group)
        nonzero = {d: n for d, n in table.items() if n}
        if nonzero != seen or sum(table.values()) != group.order:
            res.fail(f"A={group}: formula {nonzero} enumeration {seen}")
    return res


@_timed
def two_power_membership(max_extra: int = 2) -> CheckResult:
    res = CheckResult("2^beta goodness iff 2^beta | a + b")
    for a, b in GOODNESS_PAIRS:
        if (a * b) % 2 == 0:
            continue
        top = two_adic_split(abs(a + b)).beta + max_extra if a + b else 8
        for beta in range(1, top + 1):
            res.checked += 1
            if goodness.is_good(a, b, 2**beta) != ((a + b) % 2**beta == 0):
                res.fail(f"({a},{b}) beta={beta}")
    return res


SUITES = {
    "small": lambda: [
        goodness_equivalence(1000),
        disjointness_closure_doubling(1000, 500),
        fixed_set_agreement(60),
        hull_exactness(30),
        hull_bounds(30, "exponent"),
        monotonicity(4),
        finer_partial_order(6),
        order_counts(60),
        two_power_membership(),
    ],
    "full": lambda: [
        goodness_equivalence(),
        disjointness_closure_doubling(),
        fixed_set_agreement(),
        hull_exactness(),
        hull_bounds(zero_uses="order"),
        hull_bounds(zero_uses="exponent"),
        monotonicity(),
        finer_partial_order(),
        order_counts(),
        two_power_membership(),
    ],
}


def run_suite(name: str) -> list[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
