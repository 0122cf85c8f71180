"""Centralizers, normalizers, Neumann chains, power commutation and periodicity.

Carriers are infinite, so centralizers and normalizers are computed inside a
finite :class:`Universe` by brute force.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .core import EmptySampleError, LawReport, Ordering, PreconditionError, Semigroup
from .instances import FreeMonoid
from .products import FiniteSubset, as_subset

#: Default exponent bound for power scans and chain length.
DEFAULT_DEPTH = 8
#: Default number of powers inspected by :func:`periodicity`.
DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class Universe:
    """A finite deterministic window onto an instance's carrier."""

    instance: Semigroup
    elements: tuple
    recipe: dict = field(default_factory=dict, hash=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)


def explicit_universe(inst: Semigroup, elements: Iterable, **recipe) -> Universe:
    elems = tuple(inst.sorted(inst.validate(x) for x in elements))
    return Universe(inst, elems, {"kind": "explicit", "size": len(elems), **recipe})


def words_universe(inst: FreeMonoid, max_len: int) -> Universe:
    """All words of length at most ``max_len``, the empty word included."""
    if not isinstance(inst, FreeMonoid):
        raise TypeError("word universes need a free monoid")
    return Universe(inst, tuple(inst.words(max_len)),
                    {"kind": "words", "max_word_len": max_len})


def range_universe(inst: Semigroup, hi: int, lo: int = 1) -> Universe:
    """Integers lo..hi, for instances whose carrier is the positive integers."""
    return Universe(inst, tuple(inst.validate(i) for i in range(lo, hi + 1)),
                    {"kind": "range", "lo": lo, "hi": hi})


def random_universe(inst: Semigroup, size: int, seed: int = 0) -> Universe:
    """``size`` distinct seeded random elements (fewer if the generator repeats a lot)."""
    rng = random.Random(seed)
    seen: set = set()
    for _ in range(50 * size):
        if len(seen) >= size:
            break
        seen.add(inst.random_element(rng))
    return Universe(inst, tuple(inst.sorted(seen)),
                    {"kind": "random", "size": size, "seed": seed})


def default_universe(inst: Semigroup, *, max_word_len: int = 3, max_int: int = 12,
                     pool_size: int = 30, seed: int = 0) -> Universe:
    from .instances import LeftZero, NatAdd

    if isinstance(inst, FreeMonoid):
        return words_universe(inst, max_word_len)
    if isinstance(inst, NatAdd):
        return range_universe(inst, max_int)
    if isinstance(inst, LeftZero):
        return explicit_universe(inst, inst.carrier)
    return random_universe(inst, pool_size, seed)


def commutes(inst: Semigroup, a, b) -> bool:
    a, b = inst.validate(a), inst.validate(b)
    return inst.op(a, b) == inst.op(b, a)


def _subset(inst, S) -> FiniteSubset:
    S = as_subset(inst, S)
    if not len(S):
        raise EmptySampleError("S must be non-empty")
    return S


def centralizer(inst: Semigroup, S, U: Universe) -> FiniteSubset:
    """Elements of U commuting with every element of S."""
    S = _subset(inst, S)
    return FiniteSubset(inst, (u for u in U if all(inst.op(u, s) == inst.op(s, u) for s in S)),
                        validate=False)


def normalizer(inst: Semigroup, S, U: Universe) -> FiniteSubset:
    """Elements u of U with uS = Su as sets."""
    S = _subset(inst, S)
    return FiniteSubset(
        inst,
        (u for u in U if {inst.op(u, s) for s in S} == {inst.op(s, u) for s in S}),
        validate=False,
    )


def check_normalizer_equals_centralizer(inst: Semigroup, S, U: Universe) -> LawReport:
    """Compare normalizer and centralizer of S pointwise on U.

    Each u in one set but not the other is a failure.  The report is marked
    not applicable when the instance is not linearly ordered.
    """
    S = _subset(inst, S)
    report = LawReport("normalizer-equals-centralizer", applicable=inst.linearly_ordered)
    for u in U:
        report.trials += 1
        central = all(inst.op(u, s) == inst.op(s, u) for s in S)
        normal = {inst.op(u, s) for s in S} == {inst.op(s, u) for s in S}
        if central != normal:
            report.fail((u,))
    return report


def ys_sy_bound(inst: Semigroup, S, y):
    """|yS union Sy| against |S| + 1 for y outside the centralizer of S."""
    from .products import BoundCheck

    S = _subset(inst, S)
    y = inst.validate(y)
    if all(inst.op(y, s) == inst.op(s, y) for s in S):
        raise PreconditionError(f"{inst.render(y)!r} centralizes S")
    actual = len({inst.op(y, s) for s in S} | {inst.op(s, y) for s in S})
    return BoundCheck(len(S) + 1, actual, actual >= len(S) + 1)


class NeumannChain(NamedTuple):
    chain: list
    strictly_increasing: bool


def neumann_chain(inst: Semigroup, a, b, n: int = DEFAULT_DEPTH) -> NeumannChain:
    """The sequence a^n b, a^(n-1) b a, ..., b a^n for a pair with ab < ba."""
    a, b = inst.validate(a), inst.validate(b)
    if n < 1:
        raise ValueError("n must be positive")
    if inst.cmp(inst.op(a, b), inst.op(b, a)) != Ordering.LT:
        raise PreconditionError("need ab < ba; swap a and b")
    # powers[k] = a^k for k >= 1; a^0 is absorbed by skipping the factor
    powers = [None, a]
    for _ in range(n - 1):
        powers.append(inst.op(powers[-1], a))

    def term(k):
        left, right = n - k, k
        x = b if left == 0 else inst.op(powers[left], b)
        return x if right == 0 else inst.op(x, powers[right])

    chain = [term(k) for k in range(n + 1)]
    increasing = all(inst.cmp(x, y) == Ordering.LT for x, y in zip(chain, chain[1:]))
    return NeumannChain(chain, increasing)


def power_commutation_scan(inst: Semigroup, a, b, N: int = DEFAULT_DEPTH) -> LawReport:
    """a^n b = b a^n for some n <= N must agree with ab = ba."""
    a, b = inst.validate(a), inst.validate(b)
    if N < 1:
        raise ValueError("N must be positive")
    commuting = inst.op(a, b) == inst.op(b, a)
    report = LawReport("power-commutation", notes={"commuting": commuting})
    p = a
    for n in range(1, N + 1):
        if n > 1:
            p = inst.op(p, a)
        report.trials += 1
        if (inst.op(p, b) == inst.op(b, p)) != commuting:
            report.fail((a, b, n))
    return report


@dataclass(frozen=True)
class PeriodicityRecord:
    element: object
    index: int | None = None
    period: int | None = None
    bound: int | None = None

    @property
    def periodic(self) -> bool:
        return self.index is not None


def periodicity(inst: Semigroup, a, max_n: int = DEFAULT_MAX_N) -> PeriodicityRecord:
    """Smallest index and period among a, ..., a^max_n, if any power repeats."""
    a = inst.validate(a)
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    first_seen: dict = {}
    p = a
    for k in range(1, max_n + 1):
        if k > 1:
            p = inst.op(p, a)
        if p in first_seen:
            # first repeat gives the minimal index and its minimal period
            i = first_seen[p]
            return PeriodicityRecord(a, index=i, period=k - i)
        first_seen[p] = k
    return PeriodicityRecord(a, bound=max_n)


def idempotent_identity_check(inst: Semigroup, a, sample: Iterable) -> LawReport:
    """An idempotent of a cancellative semigroup acts as the identity on the sample."""
    a = inst.validate(a)
    if inst.op(a, a) != a:
        raise PreconditionError(f"{inst.render(a)!r} is not idempotent")
    report = LawReport("idempotent-is-identity")
    for b in inst.sorted(inst.validate(x) for x in sample):
        report.trials += 1
        if inst.op(a, b) != b or inst.op(b, a) != b:
            report.fail((b,))
    return report


def negative_element_check(inst: Semigroup, a, sample: Iterable) -> LawReport:
    """If a^2 < a then ab < b and aba < b for every b in the sample.

    Vacuous (zero trials, ``notes['hypothesis']`` False) when a^2 >= a.
    """
    a = inst.validate(a)
    holds = inst.cmp(inst.op(a, a), a) == Ordering.LT
    report = LawReport("negative-element", notes={"hypothesis": holds})
    if not holds:
        return report
    for b in inst.sorted(inst.validate(x) for x in sample):
        report.trials += 1
        ab = inst.op(a, b)
        if inst.cmp(ab, b) != Ordering.LT or inst.cmp(inst.op(ab, a), b) != Ordering.LT:
            report.fail((b,))
    return report


__all__ = [
    "NeumannChain", "PeriodicityRecord", "Universe", "centralizer",
    "check_normalizer_equals_centralizer", "commutes", "default_universe",
    "explicit_universe", "idempotent_identity_check", "negative_element_check",
    "neumann_chain", "normalizer", "periodicity", "power_commutation_scan",
    "random_universe", "range_universe", "words_universe", "ys_sy_bound",
]
